use crate::braidcore::Permutation;
use crate::qfield::QRational;

/// Terms `(π, (-q)^{ℓ(π)})` of the quantum determinant of `C_q[GL_N]`, in
/// lexicographic order of `π`; `π` contributes `u^1_{π(1)} ⋯ u^N_{π(N)}`.
pub fn quantum_determinant_terms(n: usize) -> Vec<(Permutation, QRational)> {
    let minus_q = -QRational::q();
    Permutation::all(n)
        .into_iter()
        .map(|p| {
            let c = minus_q.pow(p.inversions() as i64).expect("nonzero base");
            (p, c)
        })
        .collect()
}

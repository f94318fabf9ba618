//! Built-in braidings addressable by name and `key=value` parameters.

use std::collections::BTreeMap;

use crate::error::{CliError, CliResult};
use nichols_core::braidcore::Braiding;
use nichols_core::families::{
    antiflip, bundle_braiding_with, cpn_cotangent_braiding, cpn_yd_braiding, cpn_yd_scaled_braiding, diagonal, flip,
    frt_braiding, transposition_module, yd_group_braiding, GroupData, RConvention, YDGroupModule,
};
use nichols_core::linalg::FieldMatrix;
use nichols_core::qfield::{parse, QRational};

/// `(name, parameters, summary)` for every family.
pub const FAMILIES: &[(&str, &str, &str)] = &[
    ("flip", "d=2", "v⊗w ↦ w⊗v"),
    ("antiflip", "d=2", "v⊗w ↦ -w⊗v"),
    ("diagonal", "lambda=\"a,b;c,d\"", "e_i⊗e_j ↦ λ_ij e_j⊗e_i, rows separated by ';'"),
    ("frt", "n=2 convention=r|rbar scale=1", "type-A R-matrix braiding"),
    ("cpn", "n=2 [norm=EXPR]", "cotangent braiding of CP^n, default normalization -1/q"),
    ("bundle", "n=2 convention=r|rbar", "braiding evaluated from the coquasitriangular structure"),
    ("cpn-yd", "n=2", "twisted flip e_a⊗e_b ↦ q^δ(b,1) e_b⊗e_a"),
    ("cpn-yd-scaled", "n=2", "twisted flip rescaled to match cpn on ker(A_2)"),
    ("yd-sign", "", "sign line over Z/2"),
    ("yd-transpositions", "n=3", "S_n acting on its transpositions with sign"),
];

pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse(raw: &[String]) -> CliResult<Self> {
        let mut map = BTreeMap::new();
        for p in raw {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("parameter '{p}' is not of the form key=value")))?;
            if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(CliError::Input(format!("parameter '{k}' given twice")));
            }
        }
        Ok(Params(map))
    }

    pub fn map(&self) -> &BTreeMap<String, String> {
        &self.0
    }

    fn count(&self, key: &str, default: usize) -> CliResult<usize> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Input(format!("parameter {key}={v} is not a nonnegative integer"))),
        }
    }

    fn coeff(&self, key: &str) -> CliResult<Option<QRational>> {
        self.0
            .get(key)
            .map(|v| parse(v).map_err(|e| CliError::Input(format!("parameter {key}: {e}"))))
            .transpose()
    }

    fn convention(&self) -> CliResult<RConvention> {
        Ok(self.0.get("convention").map(|c| c.parse()).transpose()?.unwrap_or(RConvention::R))
    }

    fn only(&self, allowed: &[&str]) -> CliResult<()> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(CliError::Input(format!("unknown parameter '{k}' (expected {allowed:?})"))),
            None => Ok(()),
        }
    }
}

fn table(text: &str) -> CliResult<Vec<Vec<QRational>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|c| parse(c).map_err(|e| CliError::Input(format!("lambda entry '{}': {e}", c.trim()))))
                .collect()
        })
        .collect()
}

fn sign_line() -> YDGroupModule {
    YDGroupModule {
        group: GroupData::cyclic(2),
        degrees: vec![1],
        action: vec![FieldMatrix::identity(1), FieldMatrix::scalar(1, &QRational::from_int(-1))],
    }
}

pub fn build(name: &str, params: &Params) -> CliResult<Braiding> {
    let b = match name {
        "flip" | "antiflip" => {
            params.only(&["d"])?;
            let d = params.count("d", 2)?;
            if name == "flip" {
                flip(d)?
            } else {
                antiflip(d)?
            }
        }
        "diagonal" => {
            params.only(&["lambda"])?;
            let raw = params.0.get("lambda").ok_or_else(|| CliError::Input("diagonal needs lambda=...".into()))?;
            let t = table(raw)?;
            let b = diagonal(&t)?;
            Braiding::new(b.dim(), b.into_matrix())?
        }
        "frt" => {
            params.only(&["n", "convention", "scale"])?;
            let scale = params.coeff("scale")?.unwrap_or_else(QRational::one);
            frt_braiding(params.count("n", 2)?, params.convention()?, &scale)?
        }
        "cpn" => {
            params.only(&["n", "norm"])?;
            cpn_cotangent_braiding(params.count("n", 2)?, params.coeff("norm")?.as_ref())?
        }
        "bundle" => {
            params.only(&["n", "convention"])?;
            bundle_braiding_with(params.count("n", 2)?, params.convention()?)?
        }
        "cpn-yd" => {
            params.only(&["n"])?;
            cpn_yd_braiding(params.count("n", 2)?)?
        }
        "cpn-yd-scaled" => {
            params.only(&["n"])?;
            cpn_yd_scaled_braiding(params.count("n", 2)?)?
        }
        "yd-sign" => {
            params.only(&[])?;
            yd_group_braiding(&sign_line())?
        }
        "yd-transpositions" => {
            params.only(&["n"])?;
            let n = params.count("n", 3)?;
            if !(2..=4).contains(&n) {
                return Err(CliError::Input("yd-transpositions supports n = 2, 3, 4".into()));
            }
            yd_group_braiding(&transposition_module(n))?
        }
        other => {
            let known: Vec<&str> = FAMILIES.iter().map(|f| f.0).collect();
            return Err(CliError::Input(format!("unknown family '{other}' (known: {})", known.join(", "))));
        }
    };
    Ok(b)
}

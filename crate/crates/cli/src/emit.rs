//! Table emitters: structured JSON records, CSV flattening, LaTeX tabulars.
//! Laurent exponents are serialized as integer pairs.

use clap::ValueEnum;
use pkl_core::fock::Multipartition;
use pkl_core::laurent::LaurentPoly;
use pkl_core::soergel::gram::Mode;
use pkl_core::soergel::pcan::PCanonicalEntry;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Latex,
}

fn mode_name(mode: Mode) -> String {
    match mode {
        Mode::Rational => "rational".into(),
        Mode::Prime(p) => p.to_string(),
    }
}

/// coefficient-exponent pairs, highest exponent last
fn laurent_pairs(p: &LaurentPoly) -> Vec<(i64, i32)> {
    p.terms().map(|(e, c)| (c, e)).collect()
}

#[derive(Serialize)]
pub struct PcanRow {
    pub p: String,
    pub word: Vec<u8>,
    /// [[target word, [[coeff, v-power], ...]], ...]
    pub expansion: Vec<(Vec<u8>, Vec<(i64, i32)>)>,
}

impl PcanRow {
    pub fn from_entry(mode: Mode, entry: &PCanonicalEntry) -> Self {
        PcanRow {
            p: mode_name(mode),
            word: entry.word.clone(),
            expansion: entry
                .expansion
                .iter()
                .map(|(w, c)| (w.clone(), laurent_pairs(c)))
                .collect(),
        }
    }
}

fn word_str(w: &[u8]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|g| format!("s{}", g)).collect::<Vec<_>>().join(".")
    }
}

fn laurent_str(pairs: &[(i64, i32)]) -> String {
    pairs
        .iter()
        .map(|(c, e)| format!("{}*v^{}", c, e))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn emit_pcan(rows: &[PcanRow], format: Format) {
    match format {
        Format::Json => {
            for row in rows {
                println!("{}", serde_json::to_string(row).unwrap());
            }
        }
        Format::Csv => {
            println!("p,word,target,expansion");
            for row in rows {
                for (target, pairs) in &row.expansion {
                    println!(
                        "{},{},{},\"{}\"",
                        row.p,
                        word_str(&row.word),
                        word_str(target),
                        laurent_str(pairs)
                    );
                }
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{lll}}");
            println!("p & w & {{}}^p b_w \\\\ \\hline");
            for row in rows {
                let expansion = row
                    .expansion
                    .iter()
                    .map(|(t, pairs)| format!("({}) T_{{{}}}", laurent_str(pairs), word_str(t)))
                    .collect::<Vec<_>>()
                    .join(" + ");
                println!("{} & {} & ${}$ \\\\", row.p, word_str(&row.word), expansion);
            }
            println!("\\end{{tabular}}");
        }
    }
}

pub enum MultCell {
    Value(i64, bool),
    Undefined,
}

pub fn emit_mult(rows: &[(Multipartition, Multipartition, MultCell)], format: Format) {
    match format {
        Format::Json => {
            for (l, m, cell) in rows {
                let (value, conditional) = match cell {
                    MultCell::Value(v, c) => (serde_json::json!(v), *c),
                    MultCell::Undefined => (serde_json::Value::Null, false),
                };
                let rec = serde_json::json!({
                    "lambda": format!("{}", l),
                    "mu": format!("{}", m),
                    "value": value,
                    "conditional_on_m_regime": conditional,
                });
                println!("{}", rec);
            }
        }
        Format::Csv => {
            println!("lambda,mu,value");
            for (l, m, cell) in rows {
                let v = match cell {
                    MultCell::Value(v, _) => v.to_string(),
                    MultCell::Undefined => "undefined".into(),
                };
                println!("\"{}\",\"{}\",{}", l, m, v);
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{lll}}");
            println!("\\lambda & \\mu & mult \\\\ \\hline");
            for (l, m, cell) in rows {
                let v = match cell {
                    MultCell::Value(v, _) => v.to_string(),
                    MultCell::Undefined => "\\text{{undef}}".into(),
                };
                println!("{} & {} & {} \\\\", l, m, v);
            }
            println!("\\end{{tabular}}");
        }
    }
}

pub struct CrystalRow {
    pub residue: i64,
    pub raw: String,
    pub reduced: String,
    pub reduced_dual: String,
    pub values: Vec<(String, Option<Multipartition>)>,
}

pub fn emit_crystal(lambda: &Multipartition, rows: &[CrystalRow], format: Format) {
    match format {
        Format::Json => {
            for r in rows {
                let values: serde_json::Map<String, serde_json::Value> = r
                    .values
                    .iter()
                    .map(|(name, v)| {
                        (
                            name.clone(),
                            match v {
                                Some(m) => serde_json::json!(format!("{}", m)),
                                None => serde_json::Value::Null,
                            },
                        )
                    })
                    .collect();
                let rec = serde_json::json!({
                    "lambda": format!("{}", lambda),
                    "residue": r.residue,
                    "signature": r.raw,
                    "reduced": r.reduced,
                    "reduced_dual": r.reduced_dual,
                    "values": values,
                });
                println!("{}", rec);
            }
        }
        _ => {
            println!("lambda = {}", lambda);
            for r in rows {
                println!(
                    "residue {}: signature {} reduced {} (dual {})",
                    r.residue, r.raw, r.reduced, r.reduced_dual
                );
                for (name, v) in &r.values {
                    match v {
                        Some(m) => println!("  {}_{} = {}", name, r.residue, m),
                        None => println!("  {}_{} = 0", name, r.residue),
                    }
                }
            }
        }
    }
}

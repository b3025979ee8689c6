//! Aggregated classification results: the seven families, their symplectic
//! solutions and isomorphisms, serialized as JSON for the command-line tool.

use crate::families::{
    canonical_struct, det4, family, family1_normalized, is_homomorphism, phi1,
    phi3, phi3_printed, phi4, phi5, phi67, phi7,
};
use crate::param::GEN_NAMES;
use crate::symplectic::{admits_nondegenerate, symplectic_solve};
use serde_json::{json, Value};

/// Per-family summary.
pub struct FamilyReport {
    pub index: usize,
    pub bracket_table: Vec<String>,
    pub cocycle_dim: usize,
    pub general_solution: Vec<String>,
    pub det: String,
    pub nondegenerate: bool,
    pub isomorphism_target: String,
}

/// Build the reports for all seven families.
pub fn enumerate_families() -> Vec<FamilyReport> {
    (1..=7)
        .map(|idx| {
            let alg = family(idx);
            let sc = alg.structure_constants().expect("family closes");
            let mut table = Vec::new();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if sc[i][j].iter().any(|p| !p.is_zero()) {
                        let terms: Vec<String> = sc[i][j]
                            .iter()
                            .zip(GEN_NAMES)
                            .filter(|(p, _)| !p.is_zero())
                            .map(|(p, n)| format!("({}) {}", p, n))
                            .collect();
                        table.push(format!(
                            "[{}, {}] = {}",
                            GEN_NAMES[i],
                            GEN_NAMES[j],
                            terms.join(" + ")
                        ));
                    }
                }
            }
            let sol = symplectic_solve(&sc);
            let target = match idx {
                1 => "normalized family 1 (r = 1, s = 0)",
                2 => "none (no nondegenerate form)",
                6 => "family 7",
                _ => "canonical algebra [a,b]=b, [a,c]=2c, [c,d]=c",
            };
            FamilyReport {
                index: idx,
                bracket_table: table,
                cocycle_dim: sol.dim,
                general_solution: sol.general.iter().map(|f| f.to_string()).collect(),
                det: sol.form.det.to_string(),
                nondegenerate: admits_nondegenerate(&sol),
                isomorphism_target: target.to_string(),
            }
        })
        .collect()
}

/// Verify all stated isomorphisms; returns (name, passes, det) triples.
pub fn verify_family_isomorphisms() -> Vec<(String, bool, String)> {
    let rc = canonical_struct();
    let sc = |i: usize| family(i).structure_constants().unwrap();
    let scn = family1_normalized().structure_constants().unwrap();
    let items: Vec<(&str, [[crate::poly::Frac; 4]; 4], _, _)> = vec![
        ("phi1 (family1 -> normalized)", phi1(), sc(1), scn.clone()),
        ("phi3 printed (family3 -> canonical)", phi3_printed(), sc(3), rc.clone()),
        ("phi3 (canonical -> family3)", phi3(), rc.clone(), sc(3)),
        ("phi4 (canonical -> family4)", phi4(), rc.clone(), sc(4)),
        ("phi5 (canonical -> family5)", phi5(), rc.clone(), sc(5)),
        ("phi7 (family7 -> canonical)", phi7(), sc(7), rc.clone()),
        ("phi67 (family6 -> family7)", phi67(), sc(6), sc(7)),
    ];
    items
        .into_iter()
        .map(|(name, m, src, dst)| {
            let ok = is_homomorphism(&m, &src, &dst);
            (name.to_string(), ok, det4(&m).to_string())
        })
        .collect()
}

/// Full JSON classification report.
pub fn classification_report() -> Value {
    let families: Vec<Value> = enumerate_families()
        .into_iter()
        .map(|f| {
            json!({
                "family": f.index,
                "bracket_table": f.bracket_table,
                "cocycle_dim": f.cocycle_dim,
                "symplectic_general_solution": f.general_solution,
                "det_polynomial": f.det,
                "nondegeneracy_conditions": if f.nondegenerate {
                    "det nonzero for generic parameters"
                } else {
                    "degenerate for all parameters"
                },
                "isomorphism_target": f.isomorphism_target,
            })
        })
        .collect();
    let isos: Vec<Value> = verify_family_isomorphisms()
        .into_iter()
        .map(|(name, ok, det)| json!({"map": name, "verified": ok, "det": det}))
        .collect();
    let stab = crate::stabilizer::stabilizer().expect("stabilizer");
    json!({
        "canonical_target": "[a,b]=b, [a,c]=2c, [c,d]=c",
        "stabilizer": {
            "dim": stab.len(),
            "span": ["J2", "V"],
            "open_orbit_dim": 6 - stab.len(),
        },
        "families": families,
        "isomorphisms": isos,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_shape() {
        let rep = classification_report();
        assert_eq!(rep["families"].as_array().unwrap().len(), 7);
        assert_eq!(rep["stabilizer"]["dim"], 2);
        for f in rep["families"].as_array().unwrap() {
            let idx = f["family"].as_u64().unwrap();
            let nondeg = f["nondegeneracy_conditions"].as_str().unwrap();
            if idx == 2 {
                assert!(nondeg.contains("degenerate for all"));
            } else {
                assert!(nondeg.contains("nonzero"));
            }
        }
        for iso in rep["isomorphisms"].as_array().unwrap() {
            assert!(iso["verified"].as_bool().unwrap(), "{}", iso["map"]);
        }
    }
}

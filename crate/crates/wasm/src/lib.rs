//! wasm-bindgen bindings for the browser demo. Each export takes plain
//! strings/numbers and returns a JSON string; the page renders the SVG.
//!
//! The demo exposes three operations: the concatenation-diagram bijection
//! (both directions), one step of the involution on even parts, and the
//! class counts with the signed-difference sweep.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use twocolor::bipartition::{build_system, diagram_to_residual, residual_to_system, Orientation};
use twocolor::colored::counts;
use twocolor::franklin::{franklin_stats, franklin_step, halve_even, FranklinOutcome};
use twocolor::overpartition::count_odd_overpartitions;
use twocolor::partition::{Partition, StrictPartition};
use twocolor::qseries::{e_series, overline_po_series, signed_difference_series, SignWeight};

/// Weight cap for enumeration-backed counts in the page.
const COUNT_CAP: u64 = 60;
/// Truncation cap for the sweep plot.
const SWEEP_CAP: u32 = 2000;

fn parse_parts(s: &str, what: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| format!("{what}: bad part {tok:?}"))
        })
        .collect()
}

fn parse_strict(s: &str, what: &str) -> Result<StrictPartition, String> {
    StrictPartition::new(parse_parts(s, what)?).map_err(|e| format!("{what}: {e}"))
}

/// One diagram row as the page draws it: `blue` cells then `green` cells.
#[derive(Serialize)]
struct RowFill {
    blue: u64,
    green: u64,
}

#[derive(Serialize)]
struct DiagramView {
    c: u64,
    d: u64,
    t: u64,
    n: u64,
    l: Vec<u64>,
    r: Vec<u64>,
    swapped: bool,
    rows: Vec<RowFill>,
    residual: Vec<u64>,
}

fn render_system(sys: &twocolor::bipartition::BiPartitionSystem) -> Result<DiagramView, String> {
    let halves = sys.halves();
    let diagram = sys.to_diagram();
    let (_, residual) = diagram_to_residual(&diagram).map_err(|e| e.to_string())?;
    let rows: Vec<RowFill> = diagram
        .rows
        .iter()
        .enumerate()
        .map(|(row, &len)| {
            let s = row as i64 - sys.c() as i64;
            let green = if s >= 0 {
                halves.alpha_prime.get(s as usize).copied().unwrap_or(0)
            } else {
                0
            };
            RowFill {
                blue: len - green,
                green,
            }
        })
        .collect();
    let (d, t) = sys.d_and_t();
    Ok(DiagramView {
        c: sys.c(),
        d,
        t,
        n: sys.weight(),
        l: sys.l().parts().to_vec(),
        r: sys.r().parts().to_vec(),
        swapped: sys.orientation() == Orientation::Swapped,
        rows,
        residual: residual.parts().to_vec(),
    })
}

fn diagram_json(beta: &str, alpha: &str) -> Result<String, String> {
    let beta = parse_strict(beta, "beta")?;
    let alpha = parse_strict(alpha, "alpha")?;
    let sys = build_system(&beta, &alpha).map_err(|e| e.to_string())?;
    serde_json::to_string(&render_system(&sys)?).map_err(|e| e.to_string())
}

fn invert_json(c: u64, mu: &str) -> Result<String, String> {
    let mu = Partition::new(parse_parts(mu, "residual")?).map_err(|e| e.to_string())?;
    let sys = residual_to_system(c, &mu, Orientation::Normal);
    serde_json::to_string(&render_system(&sys)?).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct FranklinView {
    input: Vec<u64>,
    mu: Vec<u64>,
    s: u64,
    sigma: usize,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_mu: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_sign: Option<String>,
}

fn franklin_json(evens: &str) -> Result<String, String> {
    let evens = parse_strict(evens, "even parts")?;
    let mu = halve_even(&evens).map_err(|e| e.to_string())?;
    if mu.is_empty() {
        return Err("enter at least one even part".into());
    }
    let stats = franklin_stats(&mu).map_err(|e| e.to_string())?;
    let mut view = FranklinView {
        input: evens.parts().to_vec(),
        mu: mu.parts().to_vec(),
        s: stats.s,
        sigma: stats.sigma,
        k: stats.k,
        case: None,
        image: None,
        image_mu: None,
        fixed_m: None,
        fixed_sign: None,
    };
    match franklin_step(&mu).map_err(|e| e.to_string())? {
        FranklinOutcome::Moved { case, image } => {
            view.case = Some(case.to_string());
            view.image = Some(image.to_even().parts().to_vec());
            view.image_mu = Some(image.parts().to_vec());
        }
        FranklinOutcome::Fixed { m, sign } => {
            view.fixed_m = Some(m);
            view.fixed_sign = Some(sign.to_string());
        }
    }
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CountView {
    n: u64,
    e: String,
    e0: String,
    e1: String,
    e2: String,
    e3: String,
    po: String,
}

fn counts_json(n: u64) -> Result<String, String> {
    if n > COUNT_CAP {
        return Err(format!("n must be at most {COUNT_CAP} for enumeration"));
    }
    let c = counts(n);
    let view = CountView {
        n,
        e: c.e.to_string(),
        e0: c.e0.to_string(),
        e1: c.e1.to_string(),
        e2: c.e2.to_string(),
        e3: c.e3.to_string(),
        po: count_odd_overpartitions(n).to_string(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SweepView {
    max_n: u32,
    /// E0(n)-E1(n) for n = 0..=max_n; small integers by the identity
    diff_even: Vec<i64>,
    /// E2(n)-E3(n)
    diff_all: Vec<i64>,
    /// decimal strings; these grow far past 2^53
    e: Vec<String>,
    po: Vec<String>,
}

fn sweep_json(max_n: u32) -> Result<String, String> {
    if max_n > SWEEP_CAP {
        return Err(format!("max_n must be at most {SWEEP_CAP}"));
    }
    let order = max_n as usize;
    let to_small = |series: &twocolor::qseries::TruncatedSeries| -> Result<Vec<i64>, String> {
        series
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| "difference out of i64 range".to_string()))
            .collect()
    };
    let view = SweepView {
        max_n,
        diff_even: to_small(&signed_difference_series(SignWeight::EvenParts, order))?,
        diff_all: to_small(&signed_difference_series(SignWeight::AllParts, order))?,
        e: e_series(order).coeffs().iter().map(|c| c.to_string()).collect(),
        po: overline_po_series(order)
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn bipartition_diagram(beta: &str, alpha: &str) -> Result<String, JsValue> {
    diagram_json(beta, alpha).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bipartition_invert(c: u64, mu: &str) -> Result<String, JsValue> {
    invert_json(c, mu).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn franklin_orbit(evens: &str) -> Result<String, JsValue> {
    franklin_json(evens).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn count_summary(n: u32) -> Result<String, JsValue> {
    counts_json(n as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn difference_sweep(max_n: u32) -> Result<String, JsValue> {
    sweep_json(max_n).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_view_shape() {
        let json = diagram_json("9,5,3,1", "7,1").unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["c"], 2);
        assert_eq!(v["d"], 14);
        assert_eq!(v["t"], 12);
        assert_eq!(v["n"], 26);
        assert_eq!(v["residual"], serde_json::json!([6, 4, 1]));
        // rows (1,2,6,4,1) with green (0,0,3,0,0): the alpha' entry 0 is the
        // gap row
        let rows = v["rows"].as_array().unwrap();
        let blue: Vec<u64> = rows.iter().map(|r| r["blue"].as_u64().unwrap()).collect();
        let green: Vec<u64> = rows.iter().map(|r| r["green"].as_u64().unwrap()).collect();
        assert_eq!(blue, vec![1, 2, 3, 4, 1]);
        assert_eq!(green, vec![0, 0, 3, 0, 0]);
    }

    #[test]
    fn invert_matches_forward() {
        let forward = diagram_json("9,5,3,1", "7,1").unwrap();
        let inverse = invert_json(2, "6,4,1").unwrap();
        assert_eq!(forward, inverse);
    }

    #[test]
    fn franklin_views() {
        let moved: serde_json::Value =
            serde_json::from_str(&franklin_json("10,8,4,2").unwrap()).unwrap();
        assert_eq!(moved["case"], "case1");
        assert_eq!(moved["image"], serde_json::json!([12, 8, 4]));
        assert_eq!(moved["s"], 1);
        assert_eq!(moved["sigma"], 2);

        let fixed: serde_json::Value =
            serde_json::from_str(&franklin_json("10,8,6").unwrap()).unwrap();
        assert_eq!(fixed["fixed_m"], 3);
        assert_eq!(fixed["fixed_sign"], "minus");
        assert!(fixed.get("case").is_none());
    }

    #[test]
    fn count_and_sweep_views() {
        let c: serde_json::Value = serde_json::from_str(&counts_json(5).unwrap()).unwrap();
        assert_eq!(c["e"], "8");
        assert_eq!(c["po"], "8");

        let s: serde_json::Value = serde_json::from_str(&sweep_json(25).unwrap()).unwrap();
        assert_eq!(s["diff_even"][16], 2);
        assert_eq!(s["diff_even"][15], 0);
        assert_eq!(s["diff_all"][9], -2);
        assert_eq!(s["po"][5], "8");
    }

    #[test]
    fn errors_are_messages() {
        assert!(diagram_json("4,2", "").is_err());
        assert!(franklin_json("5,2").is_err());
        assert!(franklin_json("").is_err());
        assert!(counts_json(10_000).is_err());
    }
}

//! Exact arithmetic in the valued field of rational functions in t:
//! parsing, valuations, residues, and canonical forms.
//!
//! Run with: cargo run --example exact_scalars

use mdeg::scalar::{parse_tscalar, TScalar};

fn main() {
    let samples = [
        "(2 + 3*t)/(1 - t)",
        "t^-1",
        "t^2",
        "(t + t^3)/(1 + t)",
        "-7/2",
    ];
    println!("{:<22} {:>5} {:>10} {:>12}", "element", "val", "integral", "residue");
    for text in samples {
        let v = parse_tscalar(text).unwrap();
        let val = v
            .val()
            .map(|k| k.to_string())
            .unwrap_or_else(|_| "inf".to_string());
        let residue = v
            .reduce_mod_t()
            .map(|r| r.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!("{:<22} {:>5} {:>10} {:>12}", text, val, v.is_integral(), residue);
    }

    // the valuation is multiplicative and respects the ultrametric inequality
    let a = parse_tscalar("t^2/(1+t)").unwrap();
    let b = parse_tscalar("3*t - t^4").unwrap();
    println!();
    println!("val(a*b) = {} = val(a) + val(b) = {} + {}",
        (&a * &b).val().unwrap(), a.val().unwrap(), b.val().unwrap());
    println!("val(a+b) = {} >= min(val a, val b)", (&a + &b).val().unwrap());

    // truncated power-series expansion of an integral element
    let u = parse_tscalar("1/(1 - t)").unwrap();
    println!("series of 1/(1-t) up to t^5: {}", u.taylor_truncate(6).unwrap());
    let _ = TScalar::t_pow(-3); // negative powers live in the fraction field
}

//! Line-oriented text and CSV renderings of verdicts.

use crate::format::{sig12, sig_exact};

use super::ConjectureVerdict;

pub const CSV_HEADER: &str = "m,t,lambda3,lambda_colex,pass,candidates,seconds";

fn value(v: f64, exact: Option<crate::Rational>) -> String {
    exact.map_or_else(|| sig12(v), |q| sig_exact(q, 12))
}

pub fn csv_row(v: &ConjectureVerdict) -> String {
    format!(
        "{},{},{},{},{},{},{:.3}",
        v.m,
        v.t,
        value(v.lambda3, v.lambda3_exact),
        value(v.lambda_colex, v.lambda_colex_exact),
        v.pass,
        v.candidates_examined,
        v.seconds
    )
}

pub fn to_csv(verdicts: &[ConjectureVerdict]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for v in verdicts {
        out.push_str(&csv_row(v));
        out.push('\n');
    }
    out
}

pub fn text_line(v: &ConjectureVerdict) -> String {
    format!(
        "m={} t={} lambda3={} lambda_colex={} {} candidates={} {} maximizer={} ({:.3}s)",
        v.m,
        v.t,
        value(v.lambda3, v.lambda3_exact),
        value(v.lambda_colex, v.lambda_colex_exact),
        if v.pass { "PASS" } else { "FAIL" },
        v.candidates_examined,
        if v.exhaustive { "exhaustive" } else { "sampled" },
        v.maximizer,
        v.seconds
    )
}

pub fn to_text(verdicts: &[ConjectureVerdict]) -> String {
    verdicts.iter().map(|v| text_line(v) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{lambda3_exhaustive, HarnessOptions};

    #[test]
    fn renders() {
        let v = lambda3_exhaustive(10, &HarnessOptions::default()).unwrap();
        let row = csv_row(&v);
        assert!(row.starts_with("10,5,0.0800000000000,0.0800000000000,true,0,"), "{row}");
        assert!(to_csv(std::slice::from_ref(&v)).starts_with(CSV_HEADER));
        assert!(text_line(&v).contains("PASS"));
    }
}

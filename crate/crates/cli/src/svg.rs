//! Static two-series line chart for `figure --format svg`.

use std::fmt::Write as _;

use hyperlag::combinatorics::binomial;
use hyperlag::format::sig;
use hyperlag::verify::FigureRow;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;

pub fn figure(rows: &[FigureRow]) -> String {
    let m_max = rows.last().map_or(1, |r| r.m) as f64;
    let y_max = rows.iter().map(|r| r.smooth).fold(0.0, f64::max).max(1e-9);
    let px = |m: f64| MARGIN + (m - 1.0) / (m_max - 1.0).max(1.0) * (WIDTH - 2.0 * MARGIN);
    let py = |v: f64| HEIGHT - MARGIN - v / y_max * (HEIGHT - 2.0 * MARGIN);
    let line = |f: &dyn Fn(&FigureRow) -> f64| {
        rows.iter()
            .map(|r| format!("{:.2},{:.2}", px(r.m as f64), py(f(r))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(s, r#"<path d="M{x0},{y0} L{x0},{y1} L{x1},{y1}" fill="none" stroke="black"/>"#);
    // x ticks at the complete graphs C(t,3)
    for t in 3.. {
        let m = binomial(t, 3).unwrap_or(u64::MAX);
        if m as f64 > m_max {
            break;
        }
        let x = px(m as f64);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{y1}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, y1 + 5.0);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{m}</text>"#, y1 + 18.0);
    }
    for k in 0..=4 {
        let v = y_max * k as f64 / 4.0;
        let y = py(v);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0}" y2="{y:.2}" stroke="black"/>"#, x0 - 5.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, x0 - 8.0, y + 4.0, sig(v, 3));
    }
    let _ = writeln!(s, r#"<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{}"/>"#, line(&|r| r.conjectured));
    let _ = writeln!(s, r#"<polyline fill="none" stroke="firebrick" stroke-width="1" stroke-dasharray="4 3" points="{}"/>"#, line(&|r| r.smooth));
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">m</text>"#, WIDTH / 2.0, HEIGHT - 15.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="30" fill="steelblue">λ(C_3,m)</text>"#, x0 + 10.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="30" fill="firebrick">m·s^-3</text>"#, x0 + 120.0);
    s.push_str("</svg>\n");
    s
}

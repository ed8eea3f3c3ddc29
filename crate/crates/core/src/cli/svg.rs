//! Argand diagram of the squared eigenvalues as a standalone SVG.

use std::fmt::Write;

use num_complex::Complex64;

use crate::cartan::CartanCoord;
use crate::measures::PAIRS;

pub const SIZE: f64 = 512.0;
pub const CENTER: f64 = 256.0;
pub const RADIUS: f64 = 200.0;
/// Points closer than this share a marker and a label.
const MERGE_TOL: f64 = 1e-9;

/// Fixed three-decimal formatting with `-0.000` printed as `0.000`.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn to_screen(z: Complex64) -> (String, String) {
    (num(CENTER + RADIUS * z.re), num(CENTER - RADIUS * z.im))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Direct chords `z_j z_k` are solid, conjugate chords `z_j conj(z_k)` are
/// dashed; chords of zero length are omitted.
pub fn render(c: &CartanCoord, title: &str) -> String {
    let z = c.squared_eigenvalues();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="512" height="512" viewBox="0 0 512 512">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, r##"<rect x="0" y="0" width="512" height="512" fill="#ffffff"/>"##);
    let _ = writeln!(
        s,
        r##"<line x1="36.000" y1="256.000" x2="476.000" y2="256.000" stroke="#cccccc" stroke-width="1"/>"##
    );
    let _ = writeln!(
        s,
        r##"<line x1="256.000" y1="36.000" x2="256.000" y2="476.000" stroke="#cccccc" stroke-width="1"/>"##
    );
    let _ = writeln!(
        s,
        r##"<circle cx="256.000" cy="256.000" r="200.000" fill="none" stroke="#000000" stroke-width="1.5"/>"##
    );

    let mut line = |a: Complex64, b: Complex64, style: &str| {
        if (a - b).norm() < MERGE_TOL {
            return;
        }
        let ((x1, y1), (x2, y2)) = (to_screen(a), to_screen(b));
        let _ = writeln!(s, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#);
    };
    for &(j, k) in &PAIRS {
        line(z.get(j), z.get(k), r##"stroke="#1f5fbf" stroke-width="1.5""##);
    }
    for &(j, k) in &PAIRS {
        line(
            z.get(j),
            z.get(k).conj(),
            r##"stroke="#bf3f1f" stroke-width="1" stroke-dasharray="6 4""##,
        );
    }

    let _ = writeln!(s, r##"<circle cx="256.000" cy="256.000" r="3.000" fill="#000000"/>"##);
    let _ = writeln!(
        s,
        r#"<text x="262.000" y="272.000" font-family="sans-serif" font-size="14">0</text>"#
    );

    let mut groups: Vec<(Complex64, Vec<usize>)> = Vec::new();
    for j in 0..4 {
        match groups.iter_mut().find(|(p, _)| (*p - z.get(j)).norm() < MERGE_TOL) {
            Some((_, members)) => members.push(j),
            None => groups.push((z.get(j), vec![j])),
        }
    }
    for (p, members) in groups {
        let (cx, cy) = to_screen(p);
        let _ = writeln!(s, r##"<circle cx="{cx}" cy="{cy}" r="5.000" fill="#1f5fbf"/>"##);
        let label: Vec<String> = members.iter().map(|j| format!("z{}", j + 1)).collect();
        let (lx, ly) = to_screen(p * 1.12);
        let _ = writeln!(
            s,
            r#"<text x="{lx}" y="{ly}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            label.join(",")
        );
    }
    s.push_str("</svg>\n");
    s
}

use std::fmt::Write;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;

/// Stroke color for color `c` (1-based).
pub fn palette(c: u32) -> String {
    match c {
        1 => "red".into(),
        2 => "blue".into(),
        3 => "green".into(),
        4 => "orange".into(),
        _ => format!("hsl({:.1}, 70%, 45%)", ((c - 5) as f64 * 137.5) % 360.0),
    }
}

/// Points as black dots and each colored pair as a segment, scaled into a
/// fixed square with `y` pointing up.
pub fn render_svg(points: &[(f64, f64)], edges: &[((usize, usize), u32)]) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 { SIZE / span } else { 1.0 };
    let at = |i: usize| {
        let (x, y) = points[i];
        let sx = if span > 0.0 { MARGIN + (x - x0) * scale } else { MARGIN + SIZE / 2.0 };
        let sy = if span > 0.0 { MARGIN + SIZE - (y - y0) * scale } else { MARGIN + SIZE / 2.0 };
        (sx, sy)
    };
    let full = SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" viewBox="0 0 {full} {full}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke-width="2" stroke-linecap="round">"#);
    for &((i, j), c) in edges {
        let ((ax, ay), (bx, by)) = (at(i), at(j));
        let _ = writeln!(
            out,
            r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="{}"><title>{i}-{j}: {c}</title></line>"#,
            palette(c)
        );
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for i in 0..points.len() {
        let (x, y) = at(i);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4"><title>{i}</title></circle>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_is_fixed_then_rotates() {
        assert_eq!([1, 2, 3, 4].map(palette), ["red", "blue", "green", "orange"]);
        assert_eq!(palette(5), "hsl(0.0, 70%, 45%)");
        assert_eq!(palette(6), "hsl(137.5, 70%, 45%)");
    }

    #[test]
    fn single_point() {
        let svg = render_svg(&[(3.0, 3.0)], &[]);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<line"));
    }
}

//! LaTeX and SVG pictures of representations.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::paths::{enumerate_path_systems, PathSystem};
use super::LatticeRep;

fn subscript(d: i64) -> String {
    if (0..10).contains(&d) {
        d.to_string()
    } else {
        format!("{{{d}}}")
    }
}

impl LatticeRep {
    /// The matrix `(e^{(c_j)}_{c_j+b_j-a_i})` as a LaTeX determinant.
    pub fn matrix_latex(&self) -> String {
        let mut out = String::new();
        if self.sign() < 0 {
            out.push('-');
        }
        if self.is_empty() {
            out.push('1');
            return out;
        }
        out.push_str("\\left|\\begin{matrix}\n");
        let rows: Vec<String> = self
            .starts()
            .iter()
            .map(|&a| {
                let cells: Vec<String> = self
                    .ends()
                    .iter()
                    .map(|&(b, c)| {
                        let d = c as i64 + b - a;
                        if (0..=c as i64).contains(&d) {
                            format!("e_{}^{{({c})}}", subscript(d))
                        } else {
                            "0".to_string()
                        }
                    })
                    .collect();
                format!("\t{}", cells.join("&"))
            })
            .collect();
        out.push_str(&rows.join("\\\\\n"));
        out.push_str("\n\\end{matrix}\\right|");
        out
    }

    /// Grid, start points (filled), end points (hollow) and, when the path
    /// systems fit the enumeration budget, the edges they use drawn solid.
    pub fn to_svg(&self) -> String {
        let unit = 40.0;
        let pad = 20.0;
        let xs: Vec<i64> = self.starts().iter().copied().chain(self.ends().iter().map(|e| e.0)).collect();
        let min_x = xs.iter().copied().min().unwrap_or(0).min(0);
        let max_x = xs.iter().copied().max().unwrap_or(0).max(1);
        let max_y = self.max_height().max(1) as i64;
        let width = (max_x - min_x) as f64 * unit + 2.0 * pad;
        let height = max_y as f64 * unit + 2.0 * pad;
        let px = |x: i64| (x - min_x) as f64 * unit + pad;
        let py = |y: i64| height - pad - y as f64 * unit;

        let used: BTreeSet<((i64, u32), (i64, u32))> = enumerate_path_systems(self)
            .map(|systems| systems.iter().flat_map(|s: &PathSystem| self.edges(s)).collect())
            .unwrap_or_default();

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        for x in min_x..=max_x {
            for y in 0..max_y {
                let _ = writeln!(
                    svg,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="3,3"/>"#,
                    px(x),
                    py(y),
                    px(x),
                    py(y + 1)
                );
                if x > min_x {
                    let _ = writeln!(
                        svg,
                        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="3,3"/>"#,
                        px(x),
                        py(y),
                        px(x - 1),
                        py(y + 1)
                    );
                }
            }
        }
        for ((x1, y1), (x2, y2)) in &used {
            let _ = writeln!(
                svg,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="3"/>"#,
                px(*x1),
                py(*y1 as i64),
                px(*x2),
                py(*y2 as i64)
            );
        }
        for &a in self.starts() {
            let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="6" fill="black"/>"#, px(a), py(0));
        }
        for &(b, c) in self.ends() {
            let _ = writeln!(
                svg,
                r#"<circle cx="{}" cy="{}" r="6" fill="white" stroke="black" stroke-width="2"/>"#,
                px(b),
                py(c as i64)
            );
        }
        svg.push_str("</svg>\n");
        svg
    }

    fn edges(&self, sys: &PathSystem) -> Vec<((i64, u32), (i64, u32))> {
        (0..self.len())
            .flat_map(|i| {
                let v = sys.vertices(self, i);
                v.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpr::rep_413625;

    #[test]
    fn latex_matches_displayed_matrix() {
        let tex = rep_413625().matrix_latex();
        let rows: Vec<&str> = tex.lines().skip(1).take(4).collect();
        assert_eq!(rows[0].trim(), r"e_1^{(1)}&e_2^{(2)}&0&0\\");
        assert_eq!(rows[1].trim(), r"e_0^{(1)}&e_1^{(2)}&e_4^{(4)}&e_5^{(5)}\\");
        assert_eq!(rows[3].trim(), r"0&0&e_0^{(4)}&e_1^{(5)}");
        assert!(tex.starts_with(r"\left|\begin{matrix}"));
        assert!(tex.ends_with(r"\end{matrix}\right|"));
    }

    #[test]
    fn svg_has_points_and_used_edges() {
        let rep = LatticeRep::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 3)], 1).unwrap();
        let svg = rep.to_svg();
        assert_eq!(svg.matches("<circle").count(), 6);
        assert!(svg.contains(r#"stroke-width="3""#));
        assert!(svg.starts_with("<svg"));
    }
}

//! Plain-text rendering of morphisms and complexes: each matrix entry is a
//! coefficient times a monomial in the declared variables, such as `-3y^2`.

use brt_core::{GradedComplex, Morphism, Multidegree, Scalar};

pub fn default_vars(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn vars_or_default(vars: &[String], n: usize) -> Vec<String> {
    if vars.len() == n {
        vars.to_vec()
    } else {
        default_vars(n)
    }
}

fn separator(vars: &[String]) -> &'static str {
    if vars.iter().all(|v| v.chars().count() == 1) {
        ""
    } else {
        "*"
    }
}

pub fn monomial(exponents: &Multidegree, vars: &[String]) -> String {
    let parts: Vec<String> = exponents
        .coords()
        .iter()
        .zip(vars)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    parts.join(separator(vars))
}

pub fn entry(c: &Scalar, shift: &Multidegree, vars: &[String]) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let m = monomial(shift, vars);
    if m.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return m;
    }
    if c.is_minus_one() {
        return format!("-{m}");
    }
    let coeff = c.to_string();
    let coeff = if coeff.contains('/') { format!("({coeff})") } else { coeff };
    format!("{coeff}{}{m}", separator(vars))
}

/// Rows of cells, right-aligned per column.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        out.push_str(&format!("[ {} ]\n", cells.join("  ")));
    }
    out
}

pub fn morphism_matrix(phi: &Morphism, vars: &[String]) -> String {
    let c = phi.coefficient_matrix();
    let rows: Vec<Vec<String>> = (0..phi.g())
        .map(|i| {
            (0..phi.e())
                .map(|j| match phi.source_degrees()[j].checked_sub(&phi.target_degrees()[i]) {
                    Some(s) => entry(c.get(i, j), &s, vars),
                    None => "0".to_string(),
                })
                .collect()
        })
        .collect();
    grid(&rows)
}

pub fn complex(x: &GradedComplex, vars: &[String]) -> String {
    let mut out = String::new();
    out.push_str(&format!("ranks: {:?}\n", x.ranks()));
    for (i, level) in x.levels().iter().enumerate() {
        out.push_str(&format!("F_{i}:\n"));
        for (j, g) in level.iter().enumerate() {
            out.push_str(&format!("  {:>3}  {}  {}\n", j + 1, g.degree, g.label));
        }
    }
    for (k, d) in x.differentials().iter().enumerate() {
        let level = k + 1;
        out.push_str(&format!("d_{level}: F_{level} -> F_{}\n", level - 1));
        let rows: Vec<Vec<String>> = (0..d.rows())
            .map(|i| {
                (0..d.cols())
                    .map(|j| match x.shift(level, i, j) {
                        Some(s) => entry(d.get(i, j), &s, vars),
                        None => "0".to_string(),
                    })
                    .collect()
            })
            .collect();
        out.push_str(&grid(&rows));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use brt_core::Field;

    fn d(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn entries() {
        let q = Field::Rational;
        let v = default_vars(2);
        assert_eq!(entry(&q.from_i64(1), &d(&[0, 2]), &v), "y^2");
        assert_eq!(entry(&q.from_i64(-2), &d(&[1, 1]), &v), "-2xy");
        assert_eq!(entry(&q.from_i64(-1), &d(&[1, 0]), &v), "-x");
        assert_eq!(entry(&q.from_i64(0), &d(&[1, 0]), &v), "0");
        assert_eq!(entry(&q.from_i64(5), &d(&[0, 0]), &v), "5");
        assert_eq!(entry(&q.parse("1/2").unwrap(), &d(&[1, 0]), &v), "(1/2)x");
        let long = default_vars(4);
        assert_eq!(entry(&q.from_i64(3), &d(&[1, 0, 0, 2]), &long), "3*x1*x4^2");
    }

    #[test]
    fn grid_alignment() {
        let rows = vec![vec!["y^2".to_string(), "0".to_string()], vec!["-2xy".to_string(), "-3y^2".to_string()]];
        assert_eq!(grid(&rows), "[  y^2      0 ]\n[ -2xy  -3y^2 ]\n");
    }
}

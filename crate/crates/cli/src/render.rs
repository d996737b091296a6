//! Output formats shared by the subcommands.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use m0n_core::algebra::{Coefficient, GradedPolynomial, Poly};
use m0n_core::basis::RationalCombination;
use m0n_core::moduli::IntersectionTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Latex,
}

/// A computed value in either basis.
#[derive(Clone, Debug)]
pub enum Rendered {
    U(Poly),
    P(RationalCombination),
}

impl Rendered {
    pub fn text(&self) -> String {
        match self {
            Rendered::U(p) => p.to_string(),
            Rendered::P(c) => c.to_string(),
        }
    }

    pub fn json(&self) -> Value {
        match self {
            Rendered::U(p) => p.to_json(),
            Rendered::P(c) => c.to_json(),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Rendered::U(p) => latex_poly(p),
            Rendered::P(c) => latex_poly(c.as_polynomial()),
        }
    }
}

fn latex_symbol(sym: &str) -> String {
    if sym == "beta" {
        return r"\beta".into();
    }
    let split = sym.find(|c: char| c.is_ascii_digit()).unwrap_or(sym.len());
    let (head, idx) = sym.split_at(split);
    if idx.is_empty() {
        head.to_string()
    } else {
        format!("{head}_{{{idx}}}")
    }
}

/// `2898u_{1}^{5}-4063u_{1}^{3}u_{2}`, `\frac{45}{2}p_{1}^{3}`.
pub fn latex_poly<C: Coefficient>(p: &GradedPolynomial<C>) -> String {
    let symbols: Vec<String> = p.system().symbols().map(latex_symbol).collect();
    let mut out = String::new();
    for (e, c) in p.terms().iter().rev() {
        // Both coefficient types encode as `a` or `a/b`.
        let q: BigRational = c.encode().parse().unwrap_or_else(|_| BigRational::zero());
        let neg = Signed::is_negative(&q);
        let abs = q.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mut mono = String::new();
        for (k, &power) in e.as_slice().iter().enumerate() {
            match power {
                0 => {}
                1 => mono.push_str(&symbols[k]),
                _ => mono.push_str(&format!("{}^{{{power}}}", symbols[k])),
            }
        }
        let coeff = if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!(r"\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        if mono.is_empty() {
            out.push_str(&coeff);
        } else {
            if !abs.is_one() {
                out.push_str(&coeff);
            }
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `\psi_1^2\psi_2` (LaTeX) for a descending exponent list; `1` if empty.
pub fn latex_psi(d: &[u32]) -> String {
    if d.is_empty() {
        return "1".into();
    }
    d.iter()
        .enumerate()
        .map(|(i, &e)| if e == 1 { format!(r"\psi_{}", i + 1) } else { format!(r"\psi_{}^{}", i + 1, e) })
        .collect()
}

fn latex_cell(v: &Rendered) -> String {
    let body = v.latex();
    if body.chars().all(|c| c.is_ascii_digit() || c == '-') && !body.starts_with('-') {
        body
    } else {
        format!("${body}$")
    }
}

/// One table per total degree, laid out like the printed tables.
pub fn tables_latex(tables: &[(IntersectionTable, Vec<Vec<Rendered>>)]) -> String {
    let mut out = String::new();
    for (t, rows) in tables {
        let cols = t.columns.len();
        out.push_str("\\begin{table}[H]\n");
        out.push_str(&format!("\\caption{{$|d| = {}$}}\n", t.degree));
        out.push_str("\\begin{center}\n");
        out.push_str(&format!("\\begin{{tabular}}{{|c|{}}}\n", "c|".repeat(cols)));
        out.push_str("\\hline\n$n$");
        for d in &t.columns {
            let head = latex_psi(d);
            if head == "1" {
                out.push_str(" & 1");
            } else {
                out.push_str(&format!(" & ${head}$"));
            }
        }
        out.push_str(" \\\\ \\hline\n");
        for ((n, _), values) in t.rows.iter().zip(rows) {
            out.push_str(&n.to_string());
            for v in values {
                out.push_str(" & ");
                out.push_str(&latex_cell(v));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n\\end{center}\n\\end{table}\n\n");
    }
    out
}

pub fn tables_tsv(theory: &str, tables: &[(IntersectionTable, Vec<Vec<Rendered>>)]) -> String {
    let mut out = String::from("theory\tn\tdegree\td\tvalue\n");
    for (t, rows) in tables {
        for ((n, _), values) in t.rows.iter().zip(rows) {
            for (d, v) in t.columns.iter().zip(values) {
                let d: Vec<String> = d.iter().map(u32::to_string).collect();
                out.push_str(&format!("{theory}\t{n}\t{}\t{}\t{}\n", t.degree, d.join(","), v.text()));
            }
        }
    }
    out
}

pub fn tables_json(theory: &str, tables: &[(IntersectionTable, Vec<Vec<Rendered>>)]) -> Value {
    let list: Vec<Value> = tables
        .iter()
        .map(|(t, rows)| {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .zip(rows)
                .map(|((n, _), values)| json!({ "n": n, "values": values.iter().map(Rendered::json).collect::<Vec<_>>() }))
                .collect();
            json!({ "degree": t.degree, "columns": t.columns, "rows": rows })
        })
        .collect();
    json!({ "theory": theory, "tables": list })
}

pub fn tables_text(tables: &[(IntersectionTable, Vec<Vec<Rendered>>)]) -> String {
    let mut out = String::new();
    for (t, rows) in tables {
        out.push_str(&format!("|d| = {}\n", t.degree));
        for ((n, _), values) in t.rows.iter().zip(rows) {
            for (d, v) in t.columns.iter().zip(values) {
                out.push_str(&format!("  n = {n}  {:<24} {}\n", m0n_core::moduli::psi_label(d), v.text()));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use m0n_core::algebra::{parse_poly, GeneratorSystem};

    #[test]
    fn latex() {
        let p: Poly = parse_poly(&GeneratorSystem::lazard(), "2898u1^5 - 4063u1^3u2 + 461u5").unwrap();
        assert_eq!(latex_poly(&p), "2898u_{1}^{5}-4063u_{1}^{3}u_{2}+461u_{5}");
        let c = RationalCombination::parse("45/2*p1^3 - 30p1p2 + 17/2*p3").unwrap();
        assert_eq!(latex_poly(c.as_polynomial()), r"\frac{45}{2}p_{1}^{3}-30p_{1}p_{2}+\frac{17}{2}p_{3}");
        let k: Poly = parse_poly(&GeneratorSystem::kbeta(), "-beta^2").unwrap();
        assert_eq!(latex_poly(&k), r"-\beta^{2}");
        assert_eq!(latex_psi(&[2, 1]), r"\psi_1^2\psi_2");
    }
}

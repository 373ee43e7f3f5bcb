//! Kreweras numbers of `H_3` and `I_2(m)` as products whose exponents and
//! bracket arguments are affine in `t`, `m` and `r`.

use std::fmt::{self, Write as _};

use crate::qlaurent::{q_number_signed, IntLaurentPoly, QRational};

/// `t*T + m*M + r*R + c`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub t: i64,
    pub m: i64,
    pub r: i64,
    pub c: i64,
}

impl Affine {
    pub const fn new(t: i64, m: i64, r: i64, c: i64) -> Self {
        Self { t, m, r, c }
    }

    pub const fn constant(c: i64) -> Self {
        Self::new(0, 0, 0, c)
    }

    pub fn eval(&self, t: i64, m: i64, r: i64) -> i64 {
        self.t * t + self.m * m + self.r * r + self.c
    }

    pub fn as_constant(&self) -> Option<i64> {
        (self.t == 0 && self.m == 0 && self.r == 0).then_some(self.c)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, var) in [(self.t, "t"), (self.m, "m"), (self.r, "r")] {
            if coef == 0 {
                continue;
            }
            if coef < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if coef.abs() != 1 {
                write!(out, "{}", coef.abs())?;
            }
            out.push_str(var);
        }
        if self.c != 0 || out.is_empty() {
            if self.c >= 0 && !out.is_empty() {
                out.push('+');
            }
            write!(out, "{}", self.c)?;
        }
        f.write_str(&out)
    }
}

/// `q^e` with braces only when needed.
fn render_q_pow(e: &Affine) -> String {
    match e.as_constant() {
        Some(0) => "1".to_string(),
        Some(1) => "q".to_string(),
        Some(k) if (2..=9).contains(&k) => format!("q^{k}"),
        _ => format!("q^{{{e}}}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `q^e`
    QPow(Affine),
    /// `[e]`, extended to negative arguments
    Bracket(Affine),
    /// `q^e - 1`
    QPowMinusOne(Affine),
}

impl Factor {
    fn eval(&self, t: i64, m: i64, r: i64) -> IntLaurentPoly {
        match self {
            Factor::QPow(e) => IntLaurentPoly::q_pow(e.eval(t, m, r)),
            Factor::Bracket(e) => q_number_signed(e.eval(t, m, r), 1),
            Factor::QPowMinusOne(e) => IntLaurentPoly::q_pow_minus_one(e.eval(t, m, r)),
        }
    }

    fn render(&self) -> String {
        match self {
            Factor::QPow(e) => render_q_pow(e),
            Factor::Bracket(e) => format!("[{e}]"),
            Factor::QPowMinusOne(e) => format!("({}-1)", render_q_pow(e)),
        }
    }
}

/// Quotient of two products of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicKrew {
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
}

impl SymbolicKrew {
    pub fn eval(&self, t: i64, m: i64, r: i64) -> QRational {
        let prod = |fs: &[Factor]| -> IntLaurentPoly { fs.iter().map(|f| f.eval(t, m, r)).product() };
        QRational::new(prod(&self.num), prod(&self.den))
    }
}

impl fmt::Display for SymbolicKrew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: String = self.num.iter().map(Factor::render).collect();
        f.write_str(if num.is_empty() { "1" } else { &num })?;
        if self.den.is_empty() {
            return Ok(());
        }
        let mut groups: Vec<(String, usize)> = Vec::new();
        for fac in &self.den {
            let s = fac.render();
            match groups.last_mut() {
                Some((prev, k)) if *prev == s => *k += 1,
                _ => groups.push((s, 1)),
            }
        }
        let body: String = groups
            .iter()
            .map(|(s, k)| if *k == 1 { s.clone() } else { format!("{s}^{k}") })
            .collect();
        if groups.len() == 1 {
            write!(f, "/{body}")
        } else {
            write!(f, "/({body})")
        }
    }
}

/// `sum q^{e_i}` for the reflection-representation column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSum(pub Vec<Affine>);

impl QSum {
    pub fn eval(&self, m: i64) -> IntLaurentPoly {
        self.0
            .iter()
            .map(|e| IntLaurentPoly::q_pow(e.eval(0, m, 0)))
            .sum()
    }

    /// Number of terms, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> u32 {
        self.0.len() as u32
    }
}

impl fmt::Display for QSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(render_q_pow).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One row of an `H_3` or `I_2(m)` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label_latex: &'static str,
    pub label_plain: &'static str,
    pub krew: SymbolicKrew,
    pub qv: QSum,
    pub parabolic_latex: &'static str,
    pub parabolic_plain: &'static str,
}

impl TableRow {
    pub fn latex(&self) -> String {
        format!(
            "{}&{}&{}&{}",
            self.label_latex, self.krew, self.qv, self.parabolic_latex
        )
    }
}

const fn at(t: i64, c: i64) -> Affine {
    Affine::new(t, 0, 0, c)
}

const fn k(c: i64) -> Affine {
    Affine::constant(c)
}

use Factor::{Bracket as B, QPow as P, QPowMinusOne as M1};

fn row(
    labels: (&'static str, &'static str),
    num: Vec<Factor>,
    den: Vec<Factor>,
    qv: Vec<Affine>,
    parabolic: (&'static str, &'static str),
) -> TableRow {
    TableRow {
        label_latex: labels.0,
        label_plain: labels.1,
        krew: SymbolicKrew { num, den },
        qv: QSum(qv),
        parabolic_latex: parabolic.0,
        parabolic_plain: parabolic.1,
    }
}

const BLANK: (&str, &str) = ("", "—");

/// The ten `H_3` rows, in table order.
pub fn h3_rows() -> Vec<TableRow> {
    let one = k(1);
    vec![
        row(
            ("\\phi_{1,15}", "φ_{1,15}"),
            vec![B(at(1, -1)), B(at(1, -5)), B(at(1, -9))],
            vec![B(k(2)), B(k(6)), B(k(10))],
            vec![k(9), k(5), one],
            ("triv", "triv"),
        ),
        row(("\\phi_{1,0}", "φ_{1,0}"), vec![P(at(3, -3))], vec![], vec![], ("H_3", "H3")),
        row(
            ("\\phi_{5,5}", "φ_{5,5}"),
            vec![P(at(2, -10)), B(at(1, -1))],
            vec![B(k(2))],
            vec![one],
            ("A_1\\times A_1", "A1xA1"),
        ),
        row(
            ("\\phi_{5,2}", "φ_{5,2}"),
            vec![P(at(2, -6)), M1(one), B(at(1, -1))],
            vec![],
            vec![one],
            BLANK,
        ),
        row(
            ("\\phi_{3,6}", "φ_{3,6}"),
            vec![P(at(1, -7)), M1(one), B(at(1, -1)), B(at(1, -5))],
            vec![B(k(2))],
            vec![k(5), one],
            BLANK,
        ),
        row(
            ("\\phi_{3,8}", "φ_{3,8}"),
            vec![P(at(1, -9)), B(at(1, -1)), B(at(1, -5))],
            vec![B(k(2)), B(k(2))],
            vec![k(5), one],
            ("A_1", "A1"),
        ),
        row(
            ("\\phi_{3,1}", "φ_{3,1}"),
            vec![P(at(2, -4)), M1(one), B(at(1, -1))],
            vec![],
            vec![one],
            BLANK,
        ),
        row(
            ("\\phi_{3,3}", "φ_{3,3}"),
            vec![P(at(2, -6)), B(at(1, -1))],
            vec![B(k(2))],
            vec![one],
            ("I_{2}(5)", "I2(5)"),
        ),
        row(
            ("\\phi_{4,3}", "φ_{4,3}"),
            vec![P(at(2, -8)), M1(one), B(at(1, -1))],
            vec![],
            vec![one],
            BLANK,
        ),
        row(
            ("\\phi_{4,4}", "φ_{4,4}"),
            vec![P(at(2, -8)), B(at(1, -1))],
            vec![B(k(2))],
            vec![one],
            ("A_2", "A2"),
        ),
    ]
}

/// Row kinds of the `I_2(m)` tables; `Phi2Generic` stands for the whole
/// family `phi_{2,r}` outside the top value of `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum I2Row {
    Phi1_0,
    Phi1HalfPrime,
    Phi1HalfDoublePrime,
    Phi1M,
    Phi2Generic,
    Phi2Top,
}

impl I2Row {
    pub fn rows_for(m: u32) -> Vec<I2Row> {
        use I2Row::*;
        if m % 2 == 0 {
            vec![Phi1_0, Phi1HalfPrime, Phi1HalfDoublePrime, Phi1M, Phi2Generic]
        } else {
            vec![Phi1_0, Phi1M, Phi2Generic, Phi2Top]
        }
    }

    pub fn table_row(self, m_even: bool) -> TableRow {
        let tm1 = Affine::new(1, -1, 0, 1);
        let half = (
            vec![P(tm1), B(at(1, -1))],
            vec![B(k(2))],
            vec![k(1)],
        );
        match self {
            I2Row::Phi1_0 => row(
                ("\\phi_{1,0}", "φ_{1,0}"),
                vec![P(at(2, -2))],
                vec![],
                vec![],
                ("I_{2}(m)", "I2(m)"),
            ),
            I2Row::Phi1HalfPrime => {
                row(("\\phi_{1,m/2}'", "φ_{1,m/2}′"), half.0, half.1, half.2, ("A_1'", "A1'"))
            }
            I2Row::Phi1HalfDoublePrime => row(
                ("\\phi_{1,m/2}''", "φ_{1,m/2}″"),
                half.0,
                half.1,
                half.2,
                ("A_1''", "A1''"),
            ),
            I2Row::Phi1M => row(
                ("\\phi_{1,m}", "φ_{1,m}"),
                vec![B(at(1, -1)), B(tm1)],
                vec![B(k(2)), B(Affine::new(0, 1, 0, 0))],
                vec![Affine::new(0, 1, 0, -1), k(1)],
                ("triv", "triv"),
            ),
            I2Row::Phi2Generic => row(
                if m_even {
                    ("\\phi_{2,r}, r\\in [1,m/2-1]", "φ_{2,r}, r∈[1,m/2-1]")
                } else {
                    ("\\phi_{2,r}, r\\in [1,(m-3)/2]", "φ_{2,r}, r∈[1,(m-3)/2]")
                },
                vec![P(Affine::new(1, 0, -2, -1)), M1(at(1, -1))],
                vec![],
                vec![k(1)],
                BLANK,
            ),
            I2Row::Phi2Top => row(
                ("\\phi_{2,(m-1)/2}", "φ_{2,(m-1)/2}"),
                vec![P(tm1), B(at(1, -1))],
                vec![],
                vec![k(1)],
                ("A_1", "A1"),
            ),
        }
    }
}

//! q-Catalan, q-Narayana and q-Kreweras numbers of the coincidental types.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::partitions::{
    enumerate_bipartitions, enumerate_partitions, pair_stats, Bipartition, Partition,
};
use crate::qlaurent::{
    q_binomial, q_multinomial_signed, q_number, specialize_at_root, IntLaurentPoly, QError,
    QRational, RootValue,
};
use crate::springer_bc::{exterior_gen_poly, kreweras_via_orbit};
use crate::symbolic::{h3_rows, I2Row, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KrewError {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),
    #[error("label {label} is not an irreducible of {ty}")]
    InvalidLabel { ty: String, label: String },
    #[error("parabolic {parabolic} is not valid for {ty}")]
    InvalidParabolic { ty: String, parabolic: String },
    #[error("the closed type BC formula needs odd t, got t = {0}")]
    OddTRequired(u32),
    #[error(transparent)]
    Arithmetic(#[from] QError),
}

/// A coincidental type. `A(n)` is the symmetric group on `n` letters, of
/// rank `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(u32),
    BC(u32),
    H3,
    I2(u32),
}

impl CoxeterType {
    pub fn validate(&self) -> Result<(), KrewError> {
        let ok = match *self {
            CoxeterType::A(n) => n >= 2,
            CoxeterType::BC(n) => n >= 1,
            CoxeterType::H3 => true,
            CoxeterType::I2(m) => m >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(KrewError::InvalidType(self.to_string()))
        }
    }

    pub fn rank(&self) -> u32 {
        match *self {
            CoxeterType::A(n) => n - 1,
            CoxeterType::BC(n) => n,
            CoxeterType::H3 => 3,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Common difference `a` of the exponents.
    pub fn step(&self) -> u32 {
        match *self {
            CoxeterType::A(_) => 1,
            CoxeterType::BC(_) => 2,
            CoxeterType::H3 => 4,
            CoxeterType::I2(m) => m - 2,
        }
    }

    /// Smallest exponent `e`.
    pub fn offset(&self) -> u32 {
        1
    }

    pub fn exponents(&self) -> Vec<u32> {
        (0..self.rank())
            .map(|i| self.offset() + i * self.step())
            .collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.exponents().into_iter().map(|e| e + 1).collect()
    }

    pub fn coxeter_number(&self) -> u32 {
        self.exponents().last().copied().unwrap_or(0) + 1
    }

    pub fn irreducibles(&self) -> Vec<IrrLabel> {
        match *self {
            CoxeterType::A(n) => enumerate_partitions(n)
                .into_iter()
                .map(IrrLabel::APart)
                .collect(),
            CoxeterType::BC(n) => enumerate_bipartitions(n)
                .into_iter()
                .map(IrrLabel::BCPair)
                .collect(),
            CoxeterType::H3 => H3Irr::ALL.iter().copied().map(IrrLabel::H3).collect(),
            CoxeterType::I2(m) => {
                let mut v = vec![I2Irr::Phi1_0];
                if m % 2 == 0 {
                    v.extend([I2Irr::Phi1HalfPrime, I2Irr::Phi1HalfDoublePrime]);
                }
                v.push(I2Irr::Phi1M);
                v.extend((1..=(m - 1) / 2).map(I2Irr::Phi2));
                v.into_iter().map(IrrLabel::I2).collect()
            }
        }
    }

    /// One representative per `W`-orbit of fixed spaces of parabolic
    /// subgroups.
    pub fn parabolic_classes(&self) -> Vec<ParabolicType> {
        match *self {
            CoxeterType::A(n) => enumerate_partitions(n)
                .into_iter()
                .map(ParabolicType::A)
                .collect(),
            CoxeterType::BC(n) => (0..=n)
                .flat_map(|b| {
                    enumerate_partitions(n - b)
                        .into_iter()
                        .map(move |parts| ParabolicType::BC { b, parts })
                })
                .collect(),
            CoxeterType::H3 => H3Parabolic::ALL
                .iter()
                .copied()
                .map(ParabolicType::H3)
                .collect(),
            CoxeterType::I2(m) => {
                let mid: &[I2Parabolic] = if m % 2 == 0 {
                    &[I2Parabolic::A1Prime, I2Parabolic::A1DoublePrime]
                } else {
                    &[I2Parabolic::A1]
                };
                std::iter::once(I2Parabolic::Trivial)
                    .chain(mid.iter().copied())
                    .chain(std::iter::once(I2Parabolic::Full))
                    .map(ParabolicType::I2)
                    .collect()
            }
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A_{}", n.saturating_sub(1)),
            CoxeterType::BC(n) => write!(f, "BC_{n}"),
            CoxeterType::H3 => f.write_str("H_3"),
            CoxeterType::I2(m) => write!(f, "I_2({m})"),
        }
    }
}

/// Irreducible characters of `H_3`, named `phi_{d,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum H3Irr {
    Phi1_15,
    Phi1_0,
    Phi5_5,
    Phi5_2,
    Phi3_6,
    Phi3_8,
    Phi3_1,
    Phi3_3,
    Phi4_3,
    Phi4_4,
}

impl H3Irr {
    /// In table order.
    pub const ALL: [H3Irr; 10] = [
        H3Irr::Phi1_15,
        H3Irr::Phi1_0,
        H3Irr::Phi5_5,
        H3Irr::Phi5_2,
        H3Irr::Phi3_6,
        H3Irr::Phi3_8,
        H3Irr::Phi3_1,
        H3Irr::Phi3_3,
        H3Irr::Phi4_3,
        H3Irr::Phi4_4,
    ];

    pub fn table_row(self) -> TableRow {
        let i = H3Irr::ALL.iter().position(|&x| x == self).unwrap();
        h3_rows().swap_remove(i)
    }

    pub fn dim_and_b(self) -> (u32, u32) {
        match self {
            H3Irr::Phi1_15 => (1, 15),
            H3Irr::Phi1_0 => (1, 0),
            H3Irr::Phi5_5 => (5, 5),
            H3Irr::Phi5_2 => (5, 2),
            H3Irr::Phi3_6 => (3, 6),
            H3Irr::Phi3_8 => (3, 8),
            H3Irr::Phi3_1 => (3, 1),
            H3Irr::Phi3_3 => (3, 3),
            H3Irr::Phi4_3 => (4, 3),
            H3Irr::Phi4_4 => (4, 4),
        }
    }
}

impl fmt::Display for H3Irr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, b) = self.dim_and_b();
        write!(f, "φ_{{{d},{b}}}")
    }
}

/// Irreducible characters of `I_2(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum I2Irr {
    Phi1_0,
    /// even `m` only
    Phi1HalfPrime,
    /// even `m` only
    Phi1HalfDoublePrime,
    Phi1M,
    /// two-dimensional `phi_{2,r}`
    Phi2(u32),
}

impl I2Irr {
    pub fn is_valid_for(self, m: u32) -> bool {
        match self {
            I2Irr::Phi1_0 | I2Irr::Phi1M => true,
            I2Irr::Phi1HalfPrime | I2Irr::Phi1HalfDoublePrime => m % 2 == 0,
            I2Irr::Phi2(r) => r >= 1 && r <= (m - 1) / 2,
        }
    }

    pub fn row_kind(self, m: u32) -> I2Row {
        match self {
            I2Irr::Phi1_0 => I2Row::Phi1_0,
            I2Irr::Phi1HalfPrime => I2Row::Phi1HalfPrime,
            I2Irr::Phi1HalfDoublePrime => I2Row::Phi1HalfDoublePrime,
            I2Irr::Phi1M => I2Row::Phi1M,
            I2Irr::Phi2(r) if m % 2 == 1 && r == (m - 1) / 2 => I2Row::Phi2Top,
            I2Irr::Phi2(_) => I2Row::Phi2Generic,
        }
    }
}

impl fmt::Display for I2Irr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            I2Irr::Phi1_0 => f.write_str("φ_{1,0}"),
            I2Irr::Phi1HalfPrime => f.write_str("φ_{1,m/2}′"),
            I2Irr::Phi1HalfDoublePrime => f.write_str("φ_{1,m/2}″"),
            I2Irr::Phi1M => f.write_str("φ_{1,m}"),
            I2Irr::Phi2(r) => write!(f, "φ_{{2,{r}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrLabel {
    APart(Partition),
    BCPair(Bipartition),
    H3(H3Irr),
    I2(I2Irr),
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::APart(p) => write!(f, "{p}"),
            IrrLabel::BCPair(b) => write!(f, "{b}"),
            IrrLabel::H3(x) => write!(f, "{x}"),
            IrrLabel::I2(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum H3Parabolic {
    Trivial,
    A1,
    A1xA1,
    A2,
    I2_5,
    H3,
}

impl H3Parabolic {
    pub const ALL: [H3Parabolic; 6] = [
        H3Parabolic::Trivial,
        H3Parabolic::A1,
        H3Parabolic::A1xA1,
        H3Parabolic::A2,
        H3Parabolic::I2_5,
        H3Parabolic::H3,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum I2Parabolic {
    Trivial,
    /// odd `m`: all reflections are conjugate
    A1,
    /// even `m`: the class of `s_1`
    A1Prime,
    /// even `m`: the class of `s_2`
    A1DoublePrime,
    Full,
}

/// Parabolic subgroup up to conjugacy of its fixed space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParabolicType {
    /// `S_{a_1} x ... x S_{a_k}`, parts summing to `n`
    A(Partition),
    /// `H_b x S_{a_1} x ...` with `b + sum a_i = n`
    BC { b: u32, parts: Partition },
    H3(H3Parabolic),
    I2(I2Parabolic),
}

impl fmt::Display for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParabolicType::A(p) => write!(f, "S{p}"),
            ParabolicType::BC { b, parts } => write!(f, "H_{b}xS{parts}"),
            ParabolicType::H3(p) => f.write_str(match p {
                H3Parabolic::Trivial => "triv",
                H3Parabolic::A1 => "A1",
                H3Parabolic::A1xA1 => "A1xA1",
                H3Parabolic::A2 => "A2",
                H3Parabolic::I2_5 => "I2(5)",
                H3Parabolic::H3 => "H3",
            }),
            ParabolicType::I2(p) => f.write_str(match p {
                I2Parabolic::Trivial => "triv",
                I2Parabolic::A1 => "A1",
                I2Parabolic::A1Prime => "A1'",
                I2Parabolic::A1DoublePrime => "A1''",
                I2Parabolic::Full => "I2(m)",
            }),
        }
    }
}

fn invalid_label(ty: CoxeterType, chi: &IrrLabel) -> KrewError {
    KrewError::InvalidLabel {
        ty: ty.to_string(),
        label: chi.to_string(),
    }
}

pub fn validate_label(ty: CoxeterType, chi: &IrrLabel) -> Result<(), KrewError> {
    ty.validate()?;
    let ok = match (ty, chi) {
        (CoxeterType::A(n), IrrLabel::APart(p)) => p.size() == n,
        (CoxeterType::BC(n), IrrLabel::BCPair(b)) => b.size() == n,
        (CoxeterType::H3, IrrLabel::H3(_)) => true,
        (CoxeterType::I2(m), IrrLabel::I2(x)) => x.is_valid_for(m),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(invalid_label(ty, chi))
    }
}

/// `prod [t - 1 + d_i] / [d_i]`
pub fn catalan(ty: CoxeterType, t: u32) -> QRational {
    let degs = ty.degrees();
    let num = degs.iter().map(|&d| q_number(t - 1 + d, 1)).product();
    let den = degs.iter().map(|&d| q_number(d, 1)).product();
    QRational::new(num, den)
}

/// `q^{(t-ak-1)(n-k)} [n choose k]_{q^a}
///  prod_{i<k} (1 - q^{t-1-ai}) / prod_{i<k} (1 - q^{e+1+ai})`
pub fn narayana(ty: CoxeterType, k: u32, t: u32) -> QRational {
    let (n, a, e) = (ty.rank() as i64, ty.step() as i64, ty.offset() as i64);
    assert!(k as i64 <= n, "Narayana index out of range");
    let (k, t) = (k as i64, t as i64);
    let mut num = q_binomial(n as u32, k as u32, a as u32).shift((t - a * k - 1) * (n - k));
    let mut den = IntLaurentPoly::one();
    for i in 0..k {
        num = num * IntLaurentPoly::one_minus_q_pow(t - 1 - a * i);
        den = den * IntLaurentPoly::one_minus_q_pow(e + 1 + a * i);
    }
    QRational::new(num, den)
}

/// `q^{t(n-l) - c(lambda)} (1/[t]) [t; t-l, m_lambda(1), m_lambda(2), ...]`
fn kreweras_a(lambda: &Partition, t: u32) -> QRational {
    let n = lambda.size() as i64;
    let l = lambda.len() as i64;
    let t = t as i64;
    let mut parts = vec![t - l];
    parts.extend(lambda.multiplicities().values().map(|&m| m as i64));
    let num = q_multinomial_signed(t, &parts, 1).shift(t * (n - l) - lambda.c_stat() as i64);
    QRational::new(num, q_number(t as u32, 1))
}

/// Closed type BC formula; `t` must be odd.
pub fn kreweras_bc_closed(b: &Bipartition, t: u32) -> Result<QRational, KrewError> {
    if t % 2 == 0 {
        return Err(KrewError::OddTRequired(t));
    }
    let n = b.size() as i64;
    let st = pair_stats(b);
    let (l, big_l) = (st.l as i64, st.big_l as i64);
    let t = t as i64;
    let half = (t - 1) / 2;
    let e = t * (n - l) + l * l - 2 * st.z as i64 + st.d as i64 - n;
    let mut parts = vec![half - l];
    parts.extend(st.nonzero_mults().into_iter().map(|m| m as i64));
    let mut p = q_multinomial_signed(half - big_l, &parts, 2).shift(e);
    for j in 1..=big_l {
        p = p * IntLaurentPoly::q_pow_minus_one(t - 2 * j + 1);
    }
    Ok(QRational::from_poly(p))
}

/// The q-Kreweras number `Krew(W, chi, t; q)`. For type BC with even `t` the
/// value comes from the orbit-count route.
pub fn kreweras(ty: CoxeterType, chi: &IrrLabel, t: u32) -> Result<QRational, KrewError> {
    validate_label(ty, chi)?;
    Ok(match (ty, chi) {
        (CoxeterType::A(_), IrrLabel::APart(p)) => kreweras_a(p, t),
        (CoxeterType::BC(_), IrrLabel::BCPair(b)) if t % 2 == 1 => kreweras_bc_closed(b, t)?,
        (CoxeterType::BC(_), IrrLabel::BCPair(b)) => kreweras_via_orbit(b, t),
        (CoxeterType::H3, IrrLabel::H3(x)) => x.table_row().krew.eval(t as i64, 0, 0),
        (CoxeterType::I2(m), IrrLabel::I2(x)) => {
            let r = if let I2Irr::Phi2(r) = x { *r as i64 } else { 0 };
            x.row_kind(m)
                .table_row(m % 2 == 0)
                .krew
                .eval(t as i64, m as i64, r)
        }
        _ => unreachable!("label validated"),
    })
}

pub fn is_very_good(ty: CoxeterType, t: u32) -> bool {
    match ty {
        CoxeterType::A(n) => t.gcd(&n) == 1,
        CoxeterType::BC(_) => t % 2 == 1,
        CoxeterType::H3 => matches!(t % 10, 1 | 5 | 9),
        CoxeterType::I2(m) => t % m == 1 || t % m == m - 1,
    }
}

/// The map from parabolic classes to irreducibles.
pub fn phi(ty: CoxeterType, p: &ParabolicType) -> Result<IrrLabel, KrewError> {
    let bad = || KrewError::InvalidParabolic {
        ty: ty.to_string(),
        parabolic: p.to_string(),
    };
    ty.validate()?;
    match (ty, p) {
        (CoxeterType::A(n), ParabolicType::A(parts)) if parts.size() == n => {
            Ok(IrrLabel::APart(parts.clone()))
        }
        (CoxeterType::BC(n), ParabolicType::BC { b, parts }) if b + parts.size() == n => {
            let a = parts.parts();
            let m = a.iter().filter(|&&x| x > *b).count();
            let mut mu = vec![*b; m + 1];
            mu.extend_from_slice(&a[m..]);
            let nu = a[..m].iter().map(|&x| x - b).collect();
            Ok(IrrLabel::BCPair(Bipartition::new(
                Partition::from_unsorted(mu),
                Partition::new(nu).expect("sorted input"),
            )))
        }
        (CoxeterType::H3, ParabolicType::H3(x)) => Ok(IrrLabel::H3(match x {
            H3Parabolic::Trivial => H3Irr::Phi1_15,
            H3Parabolic::A1 => H3Irr::Phi3_8,
            H3Parabolic::A1xA1 => H3Irr::Phi5_5,
            H3Parabolic::A2 => H3Irr::Phi4_4,
            H3Parabolic::I2_5 => H3Irr::Phi3_3,
            H3Parabolic::H3 => H3Irr::Phi1_0,
        })),
        (CoxeterType::I2(m), ParabolicType::I2(x)) => {
            let label = match (x, m % 2) {
                (I2Parabolic::Trivial, _) => I2Irr::Phi1M,
                (I2Parabolic::Full, _) => I2Irr::Phi1_0,
                (I2Parabolic::A1, 1) => I2Irr::Phi2((m - 1) / 2),
                (I2Parabolic::A1Prime, 0) => I2Irr::Phi1HalfPrime,
                (I2Parabolic::A1DoublePrime, 0) => I2Irr::Phi1HalfDoublePrime,
                _ => return Err(bad()),
            };
            Ok(IrrLabel::I2(label))
        }
        _ => Err(bad()),
    }
}

pub fn in_image_phi(ty: CoxeterType, chi: &IrrLabel) -> Result<bool, KrewError> {
    validate_label(ty, chi)?;
    Ok(match chi {
        IrrLabel::APart(_) => true,
        IrrLabel::BCPair(b) => {
            let k = b.second.len() + 1;
            (1..=k).all(|i| b.first.part(i) == b.first.part(1))
        }
        IrrLabel::H3(x) => matches!(
            x,
            H3Irr::Phi1_15
                | H3Irr::Phi3_8
                | H3Irr::Phi5_5
                | H3Irr::Phi4_4
                | H3Irr::Phi3_3
                | H3Irr::Phi1_0
        ),
        IrrLabel::I2(x) => {
            let CoxeterType::I2(m) = ty else { unreachable!() };
            match x {
                I2Irr::Phi1_0 | I2Irr::Phi1M => true,
                I2Irr::Phi1HalfPrime | I2Irr::Phi1HalfDoublePrime => true,
                I2Irr::Phi2(r) => m % 2 == 1 && *r == (m - 1) / 2,
            }
        }
    })
}

/// `<Q_chi, V>` as a polynomial; not available in type A.
pub fn reflection_multiplicity(
    ty: CoxeterType,
    chi: &IrrLabel,
) -> Result<Option<IntLaurentPoly>, KrewError> {
    validate_label(ty, chi)?;
    Ok(match chi {
        IrrLabel::APart(_) => None,
        IrrLabel::BCPair(b) => Some(exterior_gen_poly(b).swap_remove(1)),
        IrrLabel::H3(x) => Some(x.table_row().qv.eval(0)),
        IrrLabel::I2(x) => {
            let CoxeterType::I2(m) = ty else { unreachable!() };
            Some(x.row_kind(m).table_row(m % 2 == 0).qv.eval(m as i64))
        }
    })
}

/// `<Q_chi, V>` at `q = 1`.
pub fn level(ty: CoxeterType, chi: &IrrLabel) -> Result<u32, KrewError> {
    validate_label(ty, chi)?;
    Ok(match chi {
        IrrLabel::APart(p) => p.len() as u32 - 1,
        IrrLabel::BCPair(b) => b.level_length() as u32,
        IrrLabel::H3(x) => x.table_row().qv.at_one(),
        IrrLabel::I2(x) => {
            let CoxeterType::I2(m) = ty else { unreachable!() };
            x.row_kind(m).table_row(m % 2 == 0).qv.at_one()
        }
    })
}

/// Sum of quotients, normalizing first so the common case stays polynomial.
pub fn sum_rationals<'a>(items: impl IntoIterator<Item = &'a QRational>) -> QRational {
    let mut poly = IntLaurentPoly::zero();
    let mut rest: Option<QRational> = None;
    for r in items {
        match r.normalize() {
            Ok(p) => poly += &p,
            Err(_) => {
                rest = Some(match rest {
                    None => r.clone(),
                    Some(acc) => acc.add(r),
                })
            }
        }
    }
    match rest {
        None => QRational::from_poly(poly),
        Some(acc) => acc.add(&QRational::from_poly(poly)),
    }
}

/// Outcome of the Narayana refinement at one `t`.
#[derive(Debug, Clone)]
pub struct RefinementReport {
    /// `k` values where the level-`k` Kreweras sum differs from `Nar(k)`
    pub failed_levels: Vec<u32>,
    pub catalan_sum_ok: bool,
}

impl RefinementReport {
    pub fn passed(&self) -> bool {
        self.failed_levels.is_empty() && self.catalan_sum_ok
    }
}

pub fn refinement_report(ty: CoxeterType, t: u32) -> Result<RefinementReport, KrewError> {
    ty.validate()?;
    let n = ty.rank();
    let mut strata: Vec<Vec<QRational>> = vec![Vec::new(); n as usize + 1];
    for chi in ty.irreducibles() {
        strata[level(ty, &chi)? as usize].push(kreweras(ty, &chi, t)?);
    }
    let nars: Vec<QRational> = (0..=n).map(|k| narayana(ty, k, t)).collect();
    let failed_levels = (0..=n)
        .filter(|&k| !sum_rationals(&strata[k as usize]).equals(&nars[k as usize]))
        .collect();
    let catalan_sum_ok = sum_rationals(&nars).equals(&catalan(ty, t));
    Ok(RefinementReport {
        failed_levels,
        catalan_sum_ok,
    })
}

pub fn refinement_check(ty: CoxeterType, t: u32) -> Result<bool, KrewError> {
    Ok(refinement_report(ty, t)?.passed())
}

/// `Krew(W, chi, t; omega_d)` for a primitive `d`-th root of unity.
pub fn specialize(ty: CoxeterType, chi: &IrrLabel, t: u32, d: u64) -> Result<RootValue, KrewError> {
    let p = kreweras(ty, chi, t)?.normalize()?;
    Ok(specialize_at_root(&p, d))
}

//! Type BC combinatorics: the set Omega of pairs `(lambda, kappa)`, the
//! bijection `iota` onto bipartitions, critical values, the maps `Phi^C` and
//! collapse, exotic orbit counts and the Kreweras numbers derived from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::partitions::{
    enumerate_bipartitions, enumerate_partitions, pair_stats, Bipartition, HmCase, Partition,
};
use crate::qlaurent::{q_factorial, IntLaurentPoly, QRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("invalid Omega pair: {0}")]
    InvalidOmega(String),
}

/// Element `(lambda, kappa)` of Omega: `lambda` is a partition of `2n` and
/// `kappa` assigns an integer to each part value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaPair {
    lambda: Partition,
    kappa: BTreeMap<u32, u32>,
}

impl OmegaPair {
    pub fn new(lambda: Partition, kappa: BTreeMap<u32, u32>) -> Result<Self, OmegaError> {
        let w = Self { lambda, kappa };
        w.validate()?;
        Ok(w)
    }

    /// `kappa = 0` on every part.
    pub fn with_zero_kappa(lambda: Partition) -> Result<Self, OmegaError> {
        let kappa = lambda.multiplicities().keys().map(|&r| (r, 0)).collect();
        Self::new(lambda, kappa)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn kappa_map(&self) -> &BTreeMap<u32, u32> {
        &self.kappa
    }

    /// `kappa(r)`, with `kappa(0) = 0`.
    pub fn kappa(&self, r: u32) -> u32 {
        if r == 0 {
            0
        } else {
            self.kappa[&r]
        }
    }

    fn validate(&self) -> Result<(), OmegaError> {
        let bad = |msg: String| Err(OmegaError::InvalidOmega(msg));
        let mult = self.lambda.multiplicities();
        if !mult.keys().eq(self.kappa.keys()) {
            return bad(format!("kappa domain differs from parts of {}", self.lambda));
        }
        for (&r, &m) in &mult {
            let k = self.kappa[&r];
            if r % 2 == 1 && m % 2 == 1 {
                return bad(format!("odd part {r} has odd multiplicity"));
            }
            if 2 * k > r {
                return bad(format!("kappa({r}) = {k} exceeds {r}/2"));
            }
            if m % 2 == 1 && 2 * k != r {
                return bad(format!("kappa({r}) must be {r}/2 for odd multiplicity"));
            }
        }
        let vals: Vec<(u32, u32)> = self.kappa.iter().map(|(&r, &k)| (r, k)).collect();
        for w in vals.windows(2) {
            let ((r0, k0), (r1, k1)) = (w[0], w[1]);
            if k0 > k1 || r0 - k0 > r1 - k1 {
                return bad(format!("kappa not monotone between {r0} and {r1}"));
            }
        }
        Ok(())
    }

    pub fn half_size(&self) -> u32 {
        self.lambda.size() / 2
    }
}

impl fmt::Display for OmegaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, kappa=", self.lambda)?;
        let items: Vec<String> = self.kappa.iter().map(|(r, k)| format!("{r}:{k}")).collect();
        write!(f, "{{{}}})", items.join(","))
    }
}

impl fmt::Debug for OmegaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All elements of Omega with `|lambda| = 2n`.
pub fn enumerate_omega(n: u32) -> Vec<OmegaPair> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(2 * n) {
        let mult = lambda.multiplicities();
        if mult.iter().any(|(&r, &m)| r % 2 == 1 && m % 2 == 1) {
            continue;
        }
        let values: Vec<(u32, u32)> = mult.into_iter().collect();
        let mut chosen = Vec::with_capacity(values.len());
        extend_kappa(&lambda, &values, &mut chosen, &mut out);
    }
    out
}

fn extend_kappa(
    lambda: &Partition,
    values: &[(u32, u32)],
    chosen: &mut Vec<u32>,
    out: &mut Vec<OmegaPair>,
) {
    let j = chosen.len();
    if j == values.len() {
        let kappa = values.iter().map(|&(r, _)| r).zip(chosen.iter().copied()).collect();
        out.push(OmegaPair {
            lambda: lambda.clone(),
            kappa,
        });
        return;
    }
    let (r, m) = values[j];
    let (mut lo, mut hi) = (0, r / 2);
    if j > 0 {
        let (rp, kp) = (values[j - 1].0, chosen[j - 1]);
        lo = lo.max(kp);
        hi = hi.min(r - rp + kp);
    }
    if m % 2 == 1 {
        lo = lo.max(r / 2);
    }
    for k in lo..=hi {
        chosen.push(k);
        extend_kappa(lambda, values, chosen, out);
        chosen.pop();
    }
}

/// The sequence `c_1, ..., c_{2s+1}` attached to `omega`.
fn c_sequence(w: &OmegaPair, s: usize) -> Result<Vec<u32>, OmegaError> {
    let len = 2 * s + 1;
    if w.lambda.len() >= len {
        return Err(OmegaError::InvalidOmega("padding too short".into()));
    }
    let mut c = Vec::with_capacity(len);
    let mut i = 1;
    while i <= len {
        let r = w.lambda.part(i);
        let k = w.kappa(r);
        if 2 * k == r {
            c.push(k);
            i += 1;
        } else {
            if w.lambda.part(i + 1) != r {
                return Err(OmegaError::InvalidOmega(format!(
                    "unpaired part {r} in {w}"
                )));
            }
            c.push(k);
            c.push(r - k);
            i += 2;
        }
    }
    Ok(c)
}

fn bipartition_from_c(c: &[u32]) -> Bipartition {
    let mu: Vec<u32> = c.iter().step_by(2).copied().filter(|&x| x > 0).collect();
    let nu: Vec<u32> = c.iter().skip(1).step_by(2).copied().filter(|&x| x > 0).collect();
    Bipartition::new(
        Partition::new(mu).expect("iota yields partitions"),
        Partition::new(nu).expect("iota yields partitions"),
    )
}

pub fn iota(w: &OmegaPair) -> Result<Bipartition, OmegaError> {
    w.validate()?;
    let s = w.lambda.len() / 2 + 1;
    let b = bipartition_from_c(&c_sequence(w, s)?);
    debug_assert_eq!(b, bipartition_from_c(&c_sequence(w, s + 1)?));
    Ok(b)
}

/// Rebuilds `omega` from the interleaved sequence: ascents `c_i < c_{i+1}`
/// are the two-element blocks, everything else is a singleton.
pub fn iota_inverse(b: &Bipartition) -> OmegaPair {
    let len = 2 * b.first.len().max(b.second.len()) + 3;
    let c = b.interleaved(len);
    let mut parts = Vec::new();
    let mut kappa: BTreeMap<u32, u32> = BTreeMap::new();
    let mut record = |r: u32, k: u32| {
        if r > 0 {
            let prev = kappa.insert(r, k);
            assert!(prev.is_none_or(|p| p == k), "inconsistent kappa at {r}");
        }
    };
    let mut i = 0;
    while i < c.len() {
        if i + 1 < c.len() && c[i] < c[i + 1] {
            let r = c[i] + c[i + 1];
            parts.extend([r, r]);
            record(r, c[i]);
            i += 2;
        } else {
            parts.push(2 * c[i]);
            record(2 * c[i], c[i]);
            i += 1;
        }
    }
    OmegaPair::new(Partition::from_unsorted(parts), kappa).expect("reconstruction lies in Omega")
}

/// Part values where both `kappa` and `r - kappa` increase strictly.
pub fn critical_values(w: &OmegaPair) -> BTreeSet<u32> {
    let kv = &w.kappa;
    kv.iter()
        .filter(|&(&r, &k)| {
            k != 0
                && kv.range(..r).all(|(_, &k2)| k2 < k)
                && kv.range(r + 1..).all(|(&r2, &k2)| r2 - k2 > r - k)
        })
        .map(|(&r, _)| r)
        .collect()
}

/// Decomposition into the distinguished part `(lambda~, kappa~)` and the
/// induced part `(lambda', 0)`.
pub fn split(w: &OmegaPair) -> Result<(OmegaPair, OmegaPair), OmegaError> {
    w.validate()?;
    let crit = critical_values(w);
    let mult = w.lambda.multiplicities();
    let mut tilde = BTreeMap::new();
    let mut rest = BTreeMap::new();
    for (&r, &m) in &mult {
        let mt = match (crit.contains(&r), m % 2) {
            (false, _) => 0,
            (true, 1) => 1,
            (true, _) => 2,
        };
        if mt > 0 {
            tilde.insert(r, mt);
        }
        if m > mt {
            rest.insert(r, m - mt);
        }
    }
    let lt = Partition::from_multiplicities(&tilde);
    let kt = tilde.keys().map(|&r| (r, w.kappa(r))).collect();
    Ok((
        OmegaPair::new(lt, kt)?,
        OmegaPair::with_zero_kappa(Partition::from_multiplicities(&rest))?,
    ))
}

/// `Phi^C`: in `(2mu_1, 2nu_1, 2mu_2, ...)` replace each ascent `s < t` by
/// two copies of `(s + t)/2`.
pub fn phi_c(b: &Bipartition) -> Partition {
    let len = 2 * b.first.len().max(b.second.len()) + 2;
    let mut seq: Vec<u32> = b.interleaved(len).into_iter().map(|x| 2 * x).collect();
    let mut i = 0;
    while i + 1 < seq.len() {
        if seq[i] < seq[i + 1] {
            let avg = (seq[i] + seq[i + 1]) / 2;
            seq[i] = avg;
            seq[i + 1] = avg;
            i += 2;
        } else {
            i += 1;
        }
    }
    debug_assert!(seq.windows(2).all(|w| w[0] >= w[1]));
    Partition::from_unsorted(seq)
}

/// `(mu, nu)^C`: every adjacent pair of `Lambda` with `a_j < a_{j+1} - 1` is
/// replaced by the floor and ceiling of its mean.
pub fn collapse_c(b: &Bipartition) -> Bipartition {
    let len = 2 * b.first.len().max(b.second.len()) + 2;
    let mut seq = b.interleaved(len);
    let mut i = 0;
    while i + 1 < seq.len() {
        if seq[i] + 1 < seq[i + 1] {
            let sum = seq[i] + seq[i + 1];
            seq[i] = sum / 2;
            seq[i + 1] = sum - sum / 2;
            i += 2;
        } else {
            i += 1;
        }
    }
    bipartition_from_c(&seq)
}

fn prod_q2i_minus_one(m: u32) -> IntLaurentPoly {
    (1..=m as i64)
        .map(|i| IntLaurentPoly::q_pow_minus_one(2 * i))
        .product()
}

/// Number of `F_q`-points of the exotic nilpotent orbit labelled by `b`.
pub fn orbit_count_exotic(b: &Bipartition) -> IntLaurentPoly {
    let n = b.size() as i64;
    let st = pair_stats(b);
    let e = n * n - 2 * st.z as i64 + st.d as i64 - n;
    let den: IntLaurentPoly = st.m.values().map(|&m| prod_q2i_minus_one(m)).product();
    prod_q2i_minus_one(n as u32)
        .div_exact(&den)
        .expect("orbit count is a polynomial")
        .shift(e)
}

/// The same count in the original shape, with the set `J` of third-case
/// values and multiplicities in `mu + nu`.
pub fn orbit_count_exotic_sun(b: &Bipartition) -> IntLaurentPoly {
    let n = b.size() as i64;
    let st = pair_stats(b);
    let sum = b.first.pointwise_add(&b.second);
    let prod_inv = |m: u32| -> IntLaurentPoly {
        (1..=m as i64)
            .map(|i| IntLaurentPoly::one_minus_q_pow(-2 * i))
            .product()
    };
    let mut den = IntLaurentPoly::one();
    for (&r, &m) in &sum.multiplicities() {
        let m = if st.hm_case.get(&r) == Some(&HmCase::BothOdd) {
            m - 1
        } else {
            m
        };
        den = den * prod_inv(m);
    }
    prod_inv(n as u32)
        .div_exact(&den)
        .expect("orbit count is a Laurent polynomial")
        .shift(2 * n * n - 2 * st.z as i64)
}

/// `q^{(n-k)(n-k-1)} (q^2-1)^{n-k} [[n]]!^2 / ([[n-k]]! [[k]]!^2)` with
/// `[[m]]` the `q^2`-integer.
pub fn level_stratum_closed_form(n: u32, k: u32) -> IntLaurentPoly {
    assert!(k <= n);
    let nf = q_factorial(n, 2);
    let kf = q_factorial(k, 2);
    let den = q_factorial(n - k, 2) * &kf * &kf;
    let j = (n - k) as i64;
    (&nf * &nf)
        .div_exact(&den)
        .expect("q^2-multinomial-like quotient is exact")
        * IntLaurentPoly::q_pow_minus_one(2).pow(n - k)
        * IntLaurentPoly::q_pow(j * (j - 1))
}

/// Sum of orbit counts over the level-`k` stratum against the closed form.
pub fn level_stratum_sum_check(n: u32, k: u32) -> bool {
    let total: IntLaurentPoly = enumerate_bipartitions(n)
        .iter()
        .filter(|b| b.level_length() == k as usize)
        .map(orbit_count_exotic)
        .sum();
    total == level_stratum_closed_form(n, k)
}

/// Coefficients of `y^0, ..., y^n` in `sum_i <Q, wedge^i V> y^i`, which is
/// `prod_{j=1}^{l} (1 + y q^{2j-1})`.
pub fn exterior_gen_poly(b: &Bipartition) -> Vec<IntLaurentPoly> {
    let n = b.size() as usize;
    let mut coeffs = vec![IntLaurentPoly::zero(); n + 1];
    coeffs[0] = IntLaurentPoly::one();
    for j in 1..=b.level_length() {
        let a = IntLaurentPoly::q_pow(2 * j as i64 - 1);
        for i in (1..=n).rev() {
            let add = &coeffs[i - 1] * &a;
            coeffs[i] += &add;
        }
    }
    coeffs
}

/// Coefficients of `y^i` in `sum_i <Q, wedge^{n-i} V> y^i`.
pub fn exterior_gen_poly_reversed(b: &Bipartition) -> Vec<IntLaurentPoly> {
    let mut c = exterior_gen_poly(b);
    c.reverse();
    c
}

/// `q^{-n^2} prod (1 - q^{2i})^{-1} |O| sum_j (-q^t)^j <Q, wedge^{n-j} V>`.
pub fn kreweras_via_orbit(b: &Bipartition, t: u32) -> QRational {
    let n = b.size() as i64;
    let y = -IntLaurentPoly::q_pow(t as i64);
    let mut g = IntLaurentPoly::zero();
    let mut y_pow = IntLaurentPoly::one();
    for c in exterior_gen_poly_reversed(b) {
        g += &(&c * &y_pow);
        y_pow = &y_pow * &y;
    }
    let num = (orbit_count_exotic(b) * g).shift(-n * n);
    let den: IntLaurentPoly = (1..=n)
        .map(|i| IntLaurentPoly::one_minus_q_pow(2 * i))
        .product();
    QRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntLaurentPoly {
        s.parse().unwrap()
    }

    fn bip(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn omega(parts: &[u32], kappa: &[(u32, u32)]) -> OmegaPair {
        OmegaPair::new(
            Partition::new(parts.to_vec()).unwrap(),
            kappa.iter().copied().collect(),
        )
        .unwrap()
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&omega(&[1, 1, 1, 1], &[(1, 0)])).unwrap(), bip("((),(1,1))"));
        assert_eq!(iota(&omega(&[4], &[(4, 2)])).unwrap(), bip("((2),())"));
        assert_eq!(iota(&omega(&[2, 2], &[(2, 1)])).unwrap(), bip("((1),(1))"));
        assert_eq!(iota(&omega(&[2, 2], &[(2, 0)])).unwrap(), bip("((),(2))"));
    }

    #[test]
    fn iota_inverse_examples() {
        assert_eq!(iota_inverse(&bip("((),(1,1))")), omega(&[1, 1, 1, 1], &[(1, 0)]));
        assert_eq!(iota_inverse(&bip("((2),())")), omega(&[4], &[(4, 2)]));
        for n in 1..5 {
            let row = Bipartition::from_parts(&[n], &[]);
            assert_eq!(iota_inverse(&row), omega(&[2 * n], &[(2 * n, n)]));
            let col = Bipartition::from_parts(&[], &[n]);
            assert_eq!(iota_inverse(&col), omega(&[n, n], &[(n, 0)]));
        }
    }

    #[test]
    fn invalid_omega_rejected() {
        let l = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let k = |v: &[(u32, u32)]| v.iter().copied().collect::<BTreeMap<_, _>>();
        assert!(OmegaPair::new(l(&[3, 1]), k(&[(3, 1), (1, 0)])).is_err());
        assert!(OmegaPair::new(l(&[4]), k(&[(4, 1)])).is_err());
        assert!(OmegaPair::new(l(&[2, 2]), k(&[(2, 2)])).is_err());
        assert!(OmegaPair::new(l(&[4, 4, 2, 2]), k(&[(4, 0), (2, 1)])).is_err());
        assert!(OmegaPair::new(l(&[4, 4]), k(&[])).is_err());
    }

    #[test]
    fn omega_counts_match_bipartitions() {
        for n in 0..=5 {
            assert_eq!(enumerate_omega(n).len(), enumerate_bipartitions(n).len());
        }
    }

    #[test]
    fn critical_examples() {
        let w = omega(&[4], &[(4, 2)]);
        assert_eq!(critical_values(&w), BTreeSet::from([4]));
        let (dist, ind) = split(&w).unwrap();
        assert_eq!(dist, w);
        assert!(ind.lambda().is_empty());

        let w = omega(&[1, 1, 1, 1], &[(1, 0)]);
        assert!(critical_values(&w).is_empty());
        let (dist, ind) = split(&w).unwrap();
        assert!(dist.lambda().is_empty());
        assert_eq!(ind, w);
    }

    #[test]
    fn phi_c_and_collapse_examples() {
        assert_eq!(phi_c(&bip("((1),(1))")), Partition::new(vec![2, 2]).unwrap());
        assert_eq!(phi_c(&bip("((),(2))")), Partition::new(vec![2, 2]).unwrap());
        assert_eq!(collapse_c(&bip("((1),(1))")), bip("((1),(1))"));
        assert_eq!(collapse_c(&bip("((),(3))")), bip("((1),(2))"));
    }

    #[test]
    fn orbit_count_examples() {
        assert_eq!(orbit_count_exotic(&bip("((1),())")), p("-1 + q^2"));
        assert_eq!(orbit_count_exotic(&bip("((),(1))")), p("1"));
        let total: IntLaurentPoly = enumerate_bipartitions(2).iter().map(orbit_count_exotic).sum();
        assert_eq!(total.leading_term().map(|(e, _)| e), Some(8));
    }

    #[test]
    fn level_stratum_examples() {
        assert_eq!(level_stratum_closed_form(1, 0), p("-1 + q^2"));
        assert!(level_stratum_sum_check(1, 0));
        assert!(level_stratum_sum_check(1, 1));
        assert!(level_stratum_sum_check(2, 1));
    }

    #[test]
    fn exterior_examples() {
        let b = bip("((),(1))");
        assert_eq!(exterior_gen_poly(&b), vec![p("1"), p("q")]);
        assert_eq!(exterior_gen_poly_reversed(&b), vec![p("q"), p("1")]);
        for n in 1..4 {
            let c = exterior_gen_poly(&Bipartition::from_parts(&[n], &[]));
            assert!(c[0].is_one() && c[1..].iter().all(|x| x.is_zero()));
        }
        assert_eq!(exterior_gen_poly(&bip("((1,1),())")), vec![p("1"), p("q"), p("0")]);
    }

    #[test]
    fn kreweras_via_orbit_examples() {
        for t in 1..8 {
            let k = kreweras_via_orbit(&bip("((1),())"), t).normalize().unwrap();
            assert_eq!(k, IntLaurentPoly::q_pow(t as i64 - 1));
        }
        let k = |s: &str| kreweras_via_orbit(&bip(s), 5).normalize().unwrap();
        assert_eq!(k("((),(1))"), p("1 + q^2"));
        assert_eq!(k("((1),(1))"), p("-q^2 + q^6"));
    }
}

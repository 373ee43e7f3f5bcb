//! Concrete coincidental Coxeter groups, the absolute order, noncrossing
//! chains and the cyclic action on them.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::kreweras::{
    phi, specialize, CoxeterType, H3Parabolic, I2Parabolic, IrrLabel, KrewError, ParabolicType,
};
use crate::partitions::Partition;
use crate::qlaurent::RootValue;

pub const DEFAULT_MAX_ORDER: usize = 1_000;
pub const DEFAULT_CHAIN_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("{what} exceeds the limit {limit}")]
    SizeLimit { what: String, limit: u64 },
    #[error("invalid delta sequence: {0}")]
    InvalidDelta(String),
    #[error("{0} does not divide s*h = {1}")]
    BadDivisor(u64, u64),
    #[error(transparent)]
    Type(#[from] KrewError),
}

/// `a + b sqrt(5)` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `(p + q sqrt 5) / den`
    pub fn from_parts(p: i64, q: i64, den: i64) -> Self {
        let d = BigInt::from(den);
        Self::new(
            BigRational::new(BigInt::from(p), d.clone()),
            BigRational::new(BigInt::from(q), d),
        )
    }

    /// The golden ratio `(1 + sqrt 5)/2 = 2 cos(pi/5)`.
    pub fn golden() -> Self {
        Self::from_parts(1, 1, 2)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let norm = &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &norm, -&self.b / &norm))
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}√5", self.a, self.b)
        }
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b)
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        let five = BigRational::from_integer(BigInt::from(5));
        QuadExt::new(
            &self.a * &o.a + five * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

/// Square matrix over `Q(sqrt 5)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    n: usize,
    data: Vec<QuadExt>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![QuadExt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = QuadExt::one();
        }
        Self { n, data }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> QuadExt) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadExt {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(QuadExt::zero(), |acc, k| &acc + &(self.get(i, k) * o.get(k, j)))
        })
    }

    pub fn minus_identity(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| {
            if i == j {
                self.get(i, j) - &QuadExt::one()
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn apply(&self, v: &[QuadExt]) -> Vec<QuadExt> {
        (0..self.n)
            .map(|i| (0..self.n).fold(QuadExt::zero(), |acc, k| &acc + &(self.get(i, k) * &v[k])))
            .collect()
    }

    /// Basis of the null space, from the reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<QuadExt>> {
        let n = self.n;
        let mut rows: Vec<Vec<QuadExt>> = (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].inverse().expect("nonzero pivot");
            rows[r] = rows[r].iter().map(|x| x * &inv).collect();
            for i in 0..n {
                if i != r && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![QuadExt::zero(); n];
                v[fc] = QuadExt::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&rows[row][fc];
                }
                v
            })
            .collect()
    }
}

/// Per-element data of the realization a group was built from.
#[derive(Clone, Debug)]
pub enum Realization {
    /// `w[i]` is the image of `i`, 0-based
    Perm(Vec<Vec<u8>>),
    /// `w[i]` is the signed image of `i + 1`
    SignedPerm(Vec<Vec<i8>>),
    /// matrices in the basis of simple roots
    Matrices(Vec<Matrix>),
    /// `(k, f)` for `rho^k sigma^f`
    Dihedral(u32, Vec<(u32, bool)>),
}

/// Closes a set of generators under multiplication. Returns the elements in
/// breadth-first order (identity first) and the right-multiplication table
/// by generators.
fn closure<E: Clone + Eq + Hash>(
    identity: E,
    gens: &[E],
    mul: impl Fn(&E, &E) -> E,
    max_order: usize,
) -> Result<(Vec<E>, Vec<Vec<u32>>, Vec<(u32, u32)>), CoxError> {
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<E, u32> = HashMap::from([(identity, 0)]);
    // parent[x] = (y, g) with x = y * gens[g]
    let mut parent = vec![(0u32, u32::MAX)];
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (g, gen) in gens.iter().enumerate() {
            let y = mul(&elems[x], gen);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elems.len() as u32;
                    if elems.len() >= max_order {
                        return Err(CoxError::SizeLimit {
                            what: "group order".into(),
                            limit: max_order as u64,
                        });
                    }
                    index.insert(y.clone(), id);
                    elems.push(y);
                    parent.push((x as u32, g as u32));
                    queue.push_back(id as usize);
                    id
                }
            };
            let r = &mut right[g];
            if r.len() <= x {
                r.resize(x + 1, u32::MAX);
            }
            r[x] = id;
        }
    }
    Ok((elems, right, parent))
}

/// A finite Coxeter group as a multiplication table over element indices.
pub struct Group {
    ty: CoxeterType,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    reflections: Vec<usize>,
    is_reflection: Vec<bool>,
    coxeter: usize,
    coxeter_number: u32,
    abs_len: Vec<u32>,
    realization: Realization,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.ty, self.order)
    }
}

pub fn build_group(ty: CoxeterType) -> Result<Group, CoxError> {
    build_group_with_limit(ty, DEFAULT_MAX_ORDER)
}

pub fn build_group_with_limit(ty: CoxeterType, max_order: usize) -> Result<Group, CoxError> {
    ty.validate()?;
    match ty {
        CoxeterType::A(n) => {
            let n = n as usize;
            let gens: Vec<Vec<u8>> = (0..n - 1)
                .map(|i| {
                    let mut p: Vec<u8> = (0..n as u8).collect();
                    p.swap(i, i + 1);
                    p
                })
                .collect();
            let id: Vec<u8> = (0..n as u8).collect();
            let mul = |a: &Vec<u8>, b: &Vec<u8>| b.iter().map(|&i| a[i as usize]).collect();
            let (elems, right, parent) = closure(id, &gens, mul, max_order)?;
            Ok(Group::assemble(ty, right, parent, Realization::Perm(elems)))
        }
        CoxeterType::BC(n) => {
            let n = n as usize;
            let id: Vec<i8> = (1..=n as i8).collect();
            let mut gens = vec![{
                let mut p = id.clone();
                p[0] = -1;
                p
            }];
            for i in 0..n - 1 {
                let mut p = id.clone();
                p.swap(i, i + 1);
                gens.push(p);
            }
            let mul = |a: &Vec<i8>, b: &Vec<i8>| {
                b.iter()
                    .map(|&j| {
                        let v = a[j.unsigned_abs() as usize - 1];
                        if j < 0 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            };
            let (elems, right, parent) = closure(id, &gens, mul, max_order)?;
            Ok(Group::assemble(ty, right, parent, Realization::SignedPerm(elems)))
        }
        CoxeterType::H3 => {
            // a_ij = -2 cos(pi / m_ij) with m_12 = 3, m_23 = 5, m_13 = 2
            let two = QuadExt::from_int(2);
            let cartan = [
                [two.clone(), QuadExt::from_int(-1), QuadExt::zero()],
                [QuadExt::from_int(-1), two.clone(), -&QuadExt::golden()],
                [QuadExt::zero(), -&QuadExt::golden(), two],
            ];
            let gens: Vec<Matrix> = (0..3)
                .map(|g| {
                    Matrix::from_fn(3, |i, j| {
                        let delta = if i == j { QuadExt::one() } else { QuadExt::zero() };
                        if i == g {
                            &delta - &cartan[g][j]
                        } else {
                            delta
                        }
                    })
                })
                .collect();
            let (elems, right, parent) =
                closure(Matrix::identity(3), &gens, |a, b| a.mul(b), max_order)?;
            Ok(Group::assemble(ty, right, parent, Realization::Matrices(elems)))
        }
        CoxeterType::I2(m) => {
            let mul = move |a: &(u32, bool), b: &(u32, bool)| {
                let k = if a.1 { (a.0 + m - b.0) % m } else { (a.0 + b.0) % m };
                (k, a.1 ^ b.1)
            };
            // s_1 = sigma, s_2 = sigma rho, so s_1 s_2 = rho
            let gens = [(0, true), (m - 1, true)];
            let (elems, right, parent) = closure((0, false), &gens, mul, max_order)?;
            Ok(Group::assemble(ty, right, parent, Realization::Dihedral(m, elems)))
        }
    }
}

impl Group {
    fn assemble(
        ty: CoxeterType,
        right: Vec<Vec<u32>>,
        parent: Vec<(u32, u32)>,
        realization: Realization,
    ) -> Group {
        let order = parent.len();
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            table[a * order] = a as u32;
        }
        // b = parent(b) * g, processed in breadth-first order
        for b in 1..order {
            let (pb, g) = parent[b];
            for a in 0..order {
                let ap = table[a * order + pb as usize];
                table[a * order + b] = right[g as usize][ap as usize];
            }
        }
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let b = (0..order).find(|&b| table[a * order + b] == 0).expect("inverse");
            inverse[a] = b as u32;
        }
        let generators: Vec<usize> = (0..right.len()).map(|g| right[g][0] as usize).collect();

        let mut is_reflection = vec![false; order];
        for &s in &generators {
            for w in 0..order {
                let x = table[table[w * order + s] as usize * order + inverse[w] as usize];
                is_reflection[x as usize] = true;
            }
        }
        let reflections: Vec<usize> = (0..order).filter(|&x| is_reflection[x]).collect();

        let coxeter = generators
            .iter()
            .fold(0usize, |acc, &s| table[acc * order + s] as usize);
        let mut coxeter_number = 1;
        let mut p = coxeter;
        while p != 0 {
            p = table[p * order + coxeter] as usize;
            coxeter_number += 1;
        }

        let mut abs_len = vec![u32::MAX; order];
        abs_len[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &r in &reflections {
                let y = table[x * order + r] as usize;
                if abs_len[y] == u32::MAX {
                    abs_len[y] = abs_len[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        Group {
            ty,
            order,
            table,
            inverse,
            generators,
            reflections,
            is_reflection,
            coxeter,
            coxeter_number,
            abs_len,
            realization,
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `a b a^{-1}`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Simple reflections `s_1, ..., s_n`.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn is_reflection(&self, w: usize) -> bool {
        self.is_reflection[w]
    }

    /// `c = s_1 s_2 ... s_n`
    pub fn coxeter_element(&self) -> usize {
        self.coxeter
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    /// Product of simple reflections, 1-based: `word(&[1, 2, 3])` is `s_1 s_2 s_3`.
    pub fn word(&self, letters: &[usize]) -> usize {
        letters
            .iter()
            .fold(0, |acc, &i| self.mul(acc, self.generators[i - 1]))
    }

    /// Word written as a digit string, e.g. `"1232321"`.
    pub fn word_str(&self, digits: &str) -> usize {
        let letters: Vec<usize> = digits
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as usize)
            .collect();
        self.word(&letters)
    }

    pub fn absolute_length(&self, w: usize) -> u32 {
        self.abs_len[w]
    }

    /// `u <= w` in absolute order: `l(u) + l(u^{-1} w) = l(w)`.
    pub fn leq_absolute(&self, u: usize, w: usize) -> bool {
        self.abs_len[u] + self.abs_len[self.mul(self.inv(u), w)] == self.abs_len[w]
    }

    /// The interval `[id, c]`.
    pub fn nc_interval(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&w| self.leq_absolute(w, self.coxeter))
            .collect()
    }

    pub fn element_string(&self, w: usize) -> String {
        match &self.realization {
            Realization::Perm(v) => {
                let s: Vec<String> = v[w].iter().map(|x| (x + 1).to_string()).collect();
                format!("[{}]", s.join(","))
            }
            Realization::SignedPerm(v) => {
                let s: Vec<String> = v[w].iter().map(|x| x.to_string()).collect();
                format!("[{}]", s.join(","))
            }
            Realization::Matrices(_) => format!("#{w}"),
            Realization::Dihedral(_, v) => {
                let (k, f) = v[w];
                format!("r^{k}{}", if f { "s" } else { "" })
            }
        }
    }

    /// Matrix of `w` in the reflection representation, where it is rational
    /// over `Q(sqrt 5)`: signed permutation matrices for BC, root-basis
    /// matrices for H3.
    pub fn matrix(&self, w: usize) -> Option<Matrix> {
        match &self.realization {
            Realization::Matrices(v) => Some(v[w].clone()),
            Realization::SignedPerm(v) => {
                let p = &v[w];
                let n = p.len();
                Some(Matrix::from_fn(n, |i, j| {
                    let img = p[j];
                    if img.unsigned_abs() as usize - 1 == i {
                        QuadExt::from_int(img.signum() as i64)
                    } else {
                        QuadExt::zero()
                    }
                }))
            }
            _ => None,
        }
    }

    /// Number of reflections fixing `V^w` pointwise.
    fn reflections_fixing(&self, w: usize) -> usize {
        let ker = self.matrix(w).expect("matrix realization").minus_identity().kernel();
        self.reflections
            .iter()
            .filter(|&&r| {
                let m = self.matrix(r).unwrap().minus_identity();
                ker.iter().all(|v| m.apply(v).iter().all(QuadExt::is_zero))
            })
            .count()
    }

    /// Conjugacy-class membership test used for the two reflection classes
    /// of `I_2(m)`, `m` even.
    fn conjugate(&self, a: usize, b: usize) -> bool {
        (0..self.order).any(|g| self.conj(g, a) == b)
    }

    /// The parabolic class `P` with `V^w` in the `W`-orbit of `V^P`.
    pub fn fixed_space_class(&self, w: usize) -> ParabolicType {
        match &self.realization {
            Realization::Perm(v) => {
                let p = &v[w];
                let mut seen = vec![false; p.len()];
                let mut lens = Vec::new();
                for i in 0..p.len() {
                    let mut len = 0;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = p[j] as usize;
                        len += 1;
                    }
                    if len > 0 {
                        lens.push(len);
                    }
                }
                ParabolicType::A(Partition::from_unsorted(lens))
            }
            Realization::SignedPerm(v) => {
                let p = &v[w];
                let mut seen = vec![false; p.len()];
                let mut b = 0;
                let mut lens = Vec::new();
                for i in 0..p.len() {
                    let (mut len, mut sign, mut j) = (0, 1i8, i);
                    while !seen[j] {
                        seen[j] = true;
                        sign *= p[j].signum();
                        j = p[j].unsigned_abs() as usize - 1;
                        len += 1;
                    }
                    if len == 0 {
                        continue;
                    }
                    if sign < 0 {
                        b += len;
                    } else {
                        lens.push(len);
                    }
                }
                ParabolicType::BC {
                    b,
                    parts: Partition::from_unsorted(lens),
                }
            }
            Realization::Matrices(_) => ParabolicType::H3(match self.abs_len[w] {
                0 => H3Parabolic::Trivial,
                1 => H3Parabolic::A1,
                3 => H3Parabolic::H3,
                _ => match self.reflections_fixing(w) {
                    5 => H3Parabolic::I2_5,
                    3 => H3Parabolic::A2,
                    2 => H3Parabolic::A1xA1,
                    k => panic!("rank-2 parabolic of H3 with {k} reflections"),
                },
            }),
            Realization::Dihedral(m, _) => ParabolicType::I2(match self.abs_len[w] {
                0 => I2Parabolic::Trivial,
                2 => I2Parabolic::Full,
                _ if m % 2 == 1 => I2Parabolic::A1,
                _ if self.conjugate(self.generators[0], w) => I2Parabolic::A1Prime,
                _ => I2Parabolic::A1DoublePrime,
            }),
        }
    }

    /// Fixed-space class of every element.
    pub fn class_table(&self) -> Vec<ParabolicType> {
        (0..self.order).map(|w| self.fixed_space_class(w)).collect()
    }
}

/// Multichain `w_1 <= ... <= w_s <= c` in absolute order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCChain(pub Vec<usize>);

/// The interval below `c` with down-sets, for chain enumeration.
pub struct NcPoset<'g> {
    group: &'g Group,
    elems: Vec<usize>,
    /// `below[i]`: positions `j` with `elems[j] <= elems[i]`
    below: Vec<Vec<usize>>,
    top: usize,
}

impl<'g> NcPoset<'g> {
    pub fn new(group: &'g Group) -> Self {
        let elems = group.nc_interval();
        let below = elems
            .iter()
            .map(|&w| {
                (0..elems.len())
                    .filter(|&j| group.leq_absolute(elems[j], w))
                    .collect()
            })
            .collect();
        let top = elems
            .iter()
            .position(|&w| w == group.coxeter_element())
            .expect("c lies in its own interval");
        Self {
            group,
            elems,
            below,
            top,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    /// `|NC^(s)(W)|`, by dynamic programming over the interval.
    pub fn chain_count(&self, s: u32) -> u128 {
        let mut counts = vec![1u128; self.elems.len()];
        for _ in 0..s {
            counts = self
                .below
                .iter()
                .map(|b| b.iter().map(|&j| counts[j]).sum())
                .collect();
        }
        counts[self.top]
    }

    pub fn chains(&self, s: u32, budget: u64) -> Result<Vec<NCChain>, CoxError> {
        assert!(s >= 1);
        let count = self.chain_count(s);
        if count > budget as u128 {
            return Err(CoxError::SizeLimit {
                what: format!("{count} chains"),
                limit: budget,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut stack = Vec::with_capacity(s as usize);
        self.extend(self.top, s, &mut stack, &mut out);
        Ok(out)
    }

    fn extend(&self, upper: usize, left: u32, stack: &mut Vec<usize>, out: &mut Vec<NCChain>) {
        if left == 0 {
            out.push(NCChain(stack.iter().rev().map(|&j| self.elems[j]).collect()));
            return;
        }
        for &j in &self.below[upper] {
            stack.push(j);
            self.extend(j, left - 1, stack, out);
            stack.pop();
        }
    }

    pub fn group(&self) -> &Group {
        self.group
    }
}

pub fn enumerate_nc_chains(g: &Group, s: u32, budget: u64) -> Result<Vec<NCChain>, CoxError> {
    NcPoset::new(g).chains(s, budget)
}

/// `(w_1^{-1} w_2, ..., w_{s-1}^{-1} w_s, w_s^{-1} c)`
pub fn delta_of(g: &Group, chain: &NCChain) -> Vec<usize> {
    let w = &chain.0;
    let c = g.coxeter_element();
    (0..w.len())
        .map(|i| {
            let next = if i + 1 < w.len() { w[i + 1] } else { c };
            g.mul(g.inv(w[i]), next)
        })
        .collect()
}

/// Inverse of [`delta_of`]: `w_1 = c (delta_1 ... delta_s)^{-1}`,
/// `w_{i+1} = w_i delta_i`.
pub fn chain_of(g: &Group, deltas: &[usize]) -> Result<NCChain, CoxError> {
    let c = g.coxeter_element();
    let prod = deltas.iter().fold(0, |acc, &d| g.mul(acc, d));
    let mut w = vec![g.mul(c, g.inv(prod))];
    for &d in &deltas[..deltas.len().saturating_sub(1)] {
        w.push(g.mul(*w.last().unwrap(), d));
    }
    let ok = w.windows(2).all(|p| g.leq_absolute(p[0], p[1]))
        && w.last().is_some_and(|&x| g.leq_absolute(x, c));
    if ok {
        Ok(NCChain(w))
    } else {
        Err(CoxError::InvalidDelta(format!("{deltas:?}")))
    }
}

/// `(delta_1, ..., delta_s) -> (c delta_s c^{-1}, delta_1, ..., delta_{s-1})`
pub fn cyclic_step(g: &Group, deltas: &[usize]) -> Vec<usize> {
    let s = deltas.len();
    let mut out = Vec::with_capacity(s);
    out.push(g.conj(g.coxeter_element(), deltas[s - 1]));
    out.extend_from_slice(&deltas[..s - 1]);
    out
}

/// Smallest `k >= 1` with `step^k(deltas) = deltas`.
pub fn orbit_period(g: &Group, deltas: &[usize]) -> u64 {
    let mut e = cyclic_step(g, deltas);
    let mut k = 1;
    while e != deltas {
        e = cyclic_step(g, &e);
        k += 1;
    }
    k
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Fixed-space class of the first element and orbit period of every chain.
fn chain_profile(g: &Group, s: u32, budget: u64) -> Result<Vec<(ParabolicType, u64)>, CoxError> {
    let classes = g.class_table();
    Ok(enumerate_nc_chains(g, s, budget)?
        .iter()
        .map(|ch| (classes[ch.0[0]].clone(), orbit_period(g, &delta_of(g, ch))))
        .collect())
}

fn census_from_profile(
    g: &Group,
    profile: &[(ParabolicType, u64)],
    power: u64,
) -> BTreeMap<ParabolicType, u64> {
    let mut census: BTreeMap<ParabolicType, u64> = g
        .coxeter_type()
        .parabolic_classes()
        .into_iter()
        .map(|p| (p, 0))
        .collect();
    for (class, period) in profile {
        if power % period == 0 {
            *census.entry(class.clone()).or_insert(0) += 1;
        }
    }
    census
}

/// For each class, the number of chains whose first element has that fixed
/// space class and which are fixed by the order-`d` element
/// `step^{sh/d}` of the cyclic action.
pub fn fixed_chain_census(
    g: &Group,
    s: u32,
    d: u64,
    budget: u64,
) -> Result<BTreeMap<ParabolicType, u64>, CoxError> {
    let sh = s as u64 * g.coxeter_number() as u64;
    if d == 0 || sh % d != 0 {
        return Err(CoxError::BadDivisor(d, sh));
    }
    let profile = chain_profile(g, s, budget)?;
    Ok(census_from_profile(g, &profile, sh / d))
}

pub fn count_fixed_chains(
    g: &Group,
    s: u32,
    d: u64,
    class: &ParabolicType,
    budget: u64,
) -> Result<u64, CoxError> {
    Ok(fixed_chain_census(g, s, d, budget)?
        .get(class)
        .copied()
        .unwrap_or(0))
}

/// One comparison of a fixed-point count with a Kreweras specialization.
#[derive(Debug, Clone)]
pub struct CssRow {
    pub d: u64,
    pub class: ParabolicType,
    pub label: IrrLabel,
    pub fixed: u64,
    pub predicted: RootValue,
}

impl CssRow {
    pub fn holds(&self) -> bool {
        self.predicted.integer() == Some(&BigInt::from(self.fixed))
    }
}

/// Fixed chains of each class under each `d | sh`, against
/// `Krew(phi(P), sh + 1)` at a primitive `d`-th root of unity.
pub fn css_rows(g: &Group, s: u32, budget: u64) -> Result<Vec<CssRow>, CoxError> {
    let ty = g.coxeter_type();
    let sh = s as u64 * g.coxeter_number() as u64;
    let t = (sh + 1) as u32;
    let profile = chain_profile(g, s, budget)?;
    let mut rows = Vec::new();
    for d in divisors(sh) {
        for (class, fixed) in census_from_profile(g, &profile, sh / d) {
            let label = phi(ty, &class)?;
            let predicted = specialize(ty, &label, t, d)?;
            rows.push(CssRow {
                d,
                class,
                label,
                fixed,
                predicted,
            });
        }
    }
    Ok(rows)
}

/// Labelled reflections `r_1..r_15` and rank-two elements `o_1..o_15` of
/// `H_3` as words in `s_1, s_2, s_3`.
pub const H3_REFLECTION_WORDS: [&str; 15] = [
    "1", "2", "1232321", "232", "31231", "121", "123123121", "2312312312312", "323123123", "323",
    "3", "12321", "2312312", "31231231231", "23232",
];

pub const H3_RANK2_WORDS: [&str; 15] = [
    "12", "12312321", "1232312312", "23231231", "3123", "23", "1231", "1232", "231231", "123232",
    "31", "123121", "123123123121", "323123123123", "323123",
];

/// `c x_i c^{-1} = x_{i+1}`, except `x_5 -> x_1`, `x_10 -> x_6`,
/// `x_15 -> x_11` (1-based).
pub fn h3_dynamics_hold(g: &Group, words: &[&str; 15]) -> bool {
    let elems: Vec<usize> = words.iter().map(|w| g.word_str(w)).collect();
    let c = g.coxeter_element();
    (0..15).all(|i| {
        let j = if i % 5 == 4 { i - 4 } else { i + 1 };
        g.conj(c, elems[i]) == elems[j]
    })
}

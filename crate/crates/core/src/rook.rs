//! The rook monoid R_n, its monoid algebra, and the Jucys–Murphy elements X_i, X̃_i.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::scalar::Rational;

/// A partial injection of {1..n}, stored 0-based as `map[col] = Some(row)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RookElement {
    n: usize,
    map: Vec<Option<usize>>,
}

impl RookElement {
    pub fn identity(n: usize) -> Self {
        RookElement {
            n,
            map: (0..n).map(Some).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        RookElement { n, map: vec![None; n] }
    }

    /// From 1-based (column, row) pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        for &(c, r) in pairs {
            if c == 0 || r == 0 || c > n || r > n {
                return Err(Error::OutOfRange(format!("({c},{r}) for n={n}")));
            }
            if map[c - 1].is_some() || used[r - 1] {
                return Err(Error::InvalidInput(format!("({c},{r}) breaks injectivity")));
            }
            map[c - 1] = Some(r - 1);
            used[r - 1] = true;
        }
        Ok(RookElement { n, map })
    }

    /// From a 0-based partial map.
    pub fn from_map(map: Vec<Option<usize>>) -> Result<Self> {
        let n = map.len();
        let pairs: Vec<(usize, usize)> = map
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c + 1, r + 1)))
            .collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based image of the 1-based column `j`.
    pub fn apply(&self, j: usize) -> Option<usize> {
        self.map.get(j.checked_sub(1)?)?.map(|r| r + 1)
    }

    pub fn map(&self) -> &[Option<usize>] {
        &self.map
    }

    /// 1-based (column, row) pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c + 1, r + 1)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n
    }

    /// Transpose, i.e. the inverse partial map.
    pub fn transpose(&self) -> Self {
        let mut map = vec![None; self.n];
        for (c, r) in self.map.iter().enumerate() {
            if let Some(r) = r {
                map[*r] = Some(c);
            }
        }
        RookElement { n: self.n, map }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        rook_mul(self, o)
    }

    /// Embed in R_{n+1}, fixing n+1.
    pub fn extend(&self) -> Self {
        let mut map = self.map.clone();
        map.push(Some(self.n));
        RookElement { n: self.n + 1, map }
    }

    /// 0/1 matrix entries (row, col), 1-based.
    pub fn matrix_entry(&self, row: usize, col: usize) -> bool {
        self.apply(col) == Some(row)
    }
}

impl fmt::Display for RookElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<[usize; 2]> = self.pairs().into_iter().map(|(c, r)| [c, r]).collect();
        write!(f, "{}", serde_json::to_string(&p).unwrap())
    }
}

/// Wire format: size plus (column, row) pairs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RookWire {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl RookElement {
    /// Parses "[[c,r],...]" for a given n.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let p: Vec<(usize, usize)> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("rook element {s:?}: {e}")))?;
        Self::from_pairs(n, &p)
    }
}

/// Composition of partial maps, equal to the 0/1 matrix product a·b.
pub fn rook_mul(a: &RookElement, b: &RookElement) -> Result<RookElement> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    Ok(RookElement {
        n: a.n,
        map: b.map.iter().map(|r| r.and_then(|r| a.map[r])).collect(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    /// s_i = (i, i+1), 1 ≤ i ≤ n-1
    S,
    /// P_j: identity with the first j diagonal entries zeroed
    P,
    /// Q_i = (2,i-1)(1,i) P_2 (1,i)(2,i-1), 2 ≤ i ≤ n
    Q,
    /// γ_i = 1 - X_i: identity with entry i zeroed
    Gamma,
}

/// The transposition (a, b); (a, a) is the identity.
pub fn transposition(a: usize, b: usize, n: usize) -> Result<RookElement> {
    if a == 0 || b == 0 || a > n || b > n {
        return Err(Error::OutOfRange(format!("({a},{b}) for n={n}")));
    }
    let mut e = RookElement::identity(n);
    e.map.swap(a - 1, b - 1);
    Ok(e)
}

fn diag_without(n: usize, zeros: &[usize]) -> RookElement {
    let mut e = RookElement::identity(n);
    for &z in zeros {
        e.map[z - 1] = None;
    }
    e
}

pub fn generator(kind: GeneratorKind, index: usize, n: usize) -> Result<RookElement> {
    let oor = || Error::OutOfRange(format!("{kind:?}_{index} for n={n}"));
    match kind {
        GeneratorKind::S => {
            if index == 0 || index >= n {
                return Err(oor());
            }
            transposition(index, index + 1, n)
        }
        GeneratorKind::P => {
            if index == 0 || index > n {
                return Err(oor());
            }
            Ok(diag_without(n, &(1..=index).collect::<Vec<_>>()))
        }
        GeneratorKind::Q => {
            if index < 2 || index > n {
                return Err(oor());
            }
            let a = transposition(2, index - 1, n)?;
            let b = transposition(1, index, n)?;
            let p2 = generator(GeneratorKind::P, 2, n)?;
            [&b, &p2, &b, &a].iter().try_fold(a.clone(), |acc, g| rook_mul(&acc, g))
        }
        GeneratorKind::Gamma => {
            if index == 0 || index > n {
                return Err(oor());
            }
            Ok(diag_without(n, &[index]))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Gen {
    S(usize),
    P1,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S(i) => write!(f, "s{i}"),
            Gen::P1 => write!(f, "P1"),
        }
    }
}

/// A word in s_1..s_{n-1}, P_1, read left to right as a product.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct GeneratorWord {
    pub tokens: Vec<Gen>,
}

impl GeneratorWord {
    pub fn new(tokens: Vec<Gen>) -> Self {
        GeneratorWord { tokens }
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut t = self.tokens.clone();
        t.extend_from_slice(&o.tokens);
        GeneratorWord { tokens: t }
    }

    pub fn evaluate(&self, n: usize) -> Result<RookElement> {
        self.tokens.iter().try_fold(RookElement::identity(n), |acc, g| {
            let e = match g {
                Gen::S(i) => generator(GeneratorKind::S, *i, n)?,
                Gen::P1 => generator(GeneratorKind::P, 1, n)?,
            };
            rook_mul(&acc, &e)
        })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.tokens.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// γ_i = s_{i-1}···s_1 P_1 s_1···s_{i-1}.
fn gamma_word(i: usize) -> Vec<Gen> {
    let mut w: Vec<Gen> = (1..i).rev().map(Gen::S).collect();
    w.push(Gen::P1);
    w.extend((1..i).map(Gen::S));
    w
}

/// ρ = σ·Π_{i∉dom ρ} γ_i with σ a permutation extending ρ, σ written in adjacent transpositions.
pub fn factor_to_word(rho: &RookElement) -> GeneratorWord {
    let n = rho.n;
    let mut used = vec![false; n];
    for r in rho.map.iter().flatten() {
        used[*r] = true;
    }
    let mut free_rows = (0..n).filter(|r| !used[*r]);
    let mut sigma: Vec<usize> = rho
        .map
        .iter()
        .map(|r| r.unwrap_or_else(|| free_rows.next().unwrap()))
        .collect();
    let mut swaps = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| sigma[i] > sigma[i + 1]) {
        sigma.swap(i, i + 1);
        swaps.push(i + 1);
    }
    let mut tokens: Vec<Gen> = swaps.into_iter().rev().map(Gen::S).collect();
    for (c, r) in rho.map.iter().enumerate() {
        if r.is_none() {
            tokens.extend(gamma_word(c + 1));
        }
    }
    GeneratorWord { tokens }
}

/// All of R_n, sorted.
pub fn enumerate_rook(n: usize) -> Vec<RookElement> {
    fn go(c: usize, n: usize, map: &mut Vec<Option<usize>>, used: &mut [bool], out: &mut Vec<RookElement>) {
        if c == n {
            out.push(RookElement { n, map: map.clone() });
            return;
        }
        map.push(None);
        go(c + 1, n, map, used, out);
        map.pop();
        for r in 0..n {
            if !used[r] {
                used[r] = true;
                map.push(Some(r));
                go(c + 1, n, map, used, out);
                map.pop();
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out.sort();
    out
}

/// Element of ℂR_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RookAlgebraElement {
    n: usize,
    sum: FormalSum<RookElement, Rational>,
}

impl RookAlgebraElement {
    pub fn zero(n: usize) -> Self {
        RookAlgebraElement {
            n,
            sum: FormalSum::zero(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_element(RookElement::identity(n))
    }

    pub fn from_element(e: RookElement) -> Self {
        RookAlgebraElement {
            n: e.n,
            sum: FormalSum::basis(e),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sum(&self) -> &FormalSum<RookElement, Rational> {
        &self.sum
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }

    pub fn coeff(&self, e: &RookElement) -> Rational {
        self.sum.coeff(e)
    }

    fn same_n(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: o.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_n(o)?;
        Ok(RookAlgebraElement {
            n: self.n,
            sum: self.sum.add(&o.sum),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_n(o)?;
        Ok(RookAlgebraElement {
            n: self.n,
            sum: self.sum.sub(&o.sum),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RookAlgebraElement {
            n: self.n,
            sum: self.sum.scale(c),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_n(o)?;
        Ok(RookAlgebraElement {
            n: self.n,
            sum: self
                .sum
                .bilinear(&o.sum, |a, b| FormalSum::basis(rook_mul(a, b).expect("same n"))),
        })
    }

    pub fn commutes_with(&self, o: &Self) -> Result<bool> {
        Ok(self.mul(o)? == o.mul(self)?)
    }
}

impl fmt::Display for RookAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sum)
    }
}

fn elem(kind: GeneratorKind, i: usize, n: usize) -> Result<RookAlgebraElement> {
    Ok(RookAlgebraElement::from_element(generator(kind, i, n)?))
}

/// X_1 = 1 - P_1, X_i = s_{i-1} X_{i-1} s_{i-1}.
pub fn jm_x(i: usize, n: usize) -> Result<RookAlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("X_{i} for n={n}")));
    }
    let mut x = RookAlgebraElement::one(n).sub(&elem(GeneratorKind::P, 1, n)?)?;
    for j in 2..=i {
        let s = elem(GeneratorKind::S, j - 1, n)?;
        x = s.mul(&x)?.mul(&s)?;
    }
    Ok(x)
}

/// X̃_1 = 0, X̃_i = s X̃_{i-1} s + s - sγ_{i-1} - γ_{i-1}s + Q_i with s = s_{i-1}.
pub fn jm_xtilde(i: usize, n: usize) -> Result<RookAlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("X~_{i} for n={n}")));
    }
    let mut x = RookAlgebraElement::zero(n);
    for j in 2..=i {
        let s = elem(GeneratorKind::S, j - 1, n)?;
        let g = elem(GeneratorKind::Gamma, j - 1, n)?;
        let q = elem(GeneratorKind::Q, j, n)?;
        x = s
            .mul(&x)?
            .mul(&s)?
            .add(&s)?
            .sub(&s.mul(&g)?)?
            .sub(&g.mul(&s)?)?
            .add(&q)?;
    }
    Ok(x)
}

pub fn kappa(n: usize) -> Result<RookAlgebraElement> {
    (1..=n).try_fold(RookAlgebraElement::zero(n), |acc, i| acc.add(&jm_x(i, n)?))
}

pub fn kappa_tilde(n: usize) -> Result<RookAlgebraElement> {
    (1..=n).try_fold(RookAlgebraElement::zero(n), |acc, i| acc.add(&jm_xtilde(i, n)?))
}

/// One K ∈ C_{σ,r} with the permutation θ_K σ θ_K^tr of {1..r}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportItem {
    /// 1-based, increasing.
    pub k: Vec<usize>,
    pub compressed: RookElement,
}

/// All r-subsets K with σK = K (unions of cycles of σ), with the compressed permutation.
pub fn support_data(sigma: &RookElement, r: usize) -> Vec<SupportItem> {
    let n = sigma.n;
    let mut seen = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cyc = vec![start];
        let mut cur = start;
        let closed = loop {
            match sigma.map[cur] {
                None => break false,
                Some(nx) if nx == start => break true,
                Some(nx) if cyc.contains(&nx) || seen[nx] => break false,
                Some(nx) => {
                    cyc.push(nx);
                    cur = nx;
                }
            }
        };
        if closed {
            for &c in &cyc {
                seen[c] = true;
            }
            cycles.push(cyc);
        }
    }
    let mut out = Vec::new();
    let m = cycles.len();
    for mask in 0u32..(1 << m) {
        let mut k: Vec<usize> = (0..m)
            .filter(|b| mask >> b & 1 == 1)
            .flat_map(|b| cycles[b].iter().copied())
            .collect();
        if k.len() != r {
            continue;
        }
        k.sort_unstable();
        let map = k
            .iter()
            .map(|&c| Some(k.binary_search(&sigma.map[c].unwrap()).unwrap()))
            .collect();
        out.push(SupportItem {
            k: k.iter().map(|x| x + 1).collect(),
            compressed: RookElement { n: r, map },
        });
    }
    out.sort_by(|a, b| a.k.cmp(&b.k));
    out
}

/// The presentation relations (a)–(e) and P_j = P_{j-1} s_{j-1} P_{j-1}, as word pairs.
pub fn relation_words(n: usize) -> Vec<(String, GeneratorWord, GeneratorWord)> {
    let w = |t: &[Gen]| GeneratorWord::new(t.to_vec());
    let mut out = Vec::new();
    for i in 1..n {
        out.push((format!("a: s{i}^2 = 1"), w(&[Gen::S(i), Gen::S(i)]), w(&[])));
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            format!("b: s{i}s{}s{i} = s{}s{i}s{}", i + 1, i + 1, i + 1),
            w(&[Gen::S(i), Gen::S(i + 1), Gen::S(i)]),
            w(&[Gen::S(i + 1), Gen::S(i), Gen::S(i + 1)]),
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push((
                format!("c: s{i}s{j} = s{j}s{i}"),
                w(&[Gen::S(i), Gen::S(j)]),
                w(&[Gen::S(j), Gen::S(i)]),
            ));
        }
    }
    for i in 2..n {
        out.push((
            format!("d: s{i}P1 = P1s{i}"),
            w(&[Gen::S(i), Gen::P1]),
            w(&[Gen::P1, Gen::S(i)]),
        ));
    }
    if n >= 1 {
        out.push(("e: P1^2 = P1".into(), w(&[Gen::P1, Gen::P1]), w(&[Gen::P1])));
    }
    for j in 2..=n {
        let pj = factor_to_word(&generator(GeneratorKind::P, j, n).unwrap());
        let pj1 = factor_to_word(&generator(GeneratorKind::P, j - 1, n).unwrap());
        let rhs = pj1.concat(&w(&[Gen::S(j - 1)])).concat(&pj1);
        out.push((format!("P{j} = P{}s{}P{}", j - 1, j - 1, j - 1), pj, rhs));
    }
    out
}

/// Number of points fixed by σ.
pub fn fixed_points(sigma: &RookElement) -> usize {
    sigma.map.iter().enumerate().filter(|(c, r)| **r == Some(*c)).count()
}

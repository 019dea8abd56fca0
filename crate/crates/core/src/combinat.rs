//! Young diagrams, tableaux, set partitions and set-partition tableaux.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, drawn as a Young diagram with rows running downwards.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based (row, col).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

pub fn content(b: Cell) -> i64 {
    b.col as i64 - b.row as i64
}

impl Ord for YoungDiagram {
    /// By size, then parts in decreasing lexicographic order.
    fn cmp(&self, o: &Self) -> Ordering {
        self.size().cmp(&o.size()).then_with(|| o.parts.cmp(&self.parts))
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {parts:?}")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1).and_then(|r| self.parts.get(r)).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: Cell) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.row_len(b.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| Cell::new(r + 1, c)))
    }

    /// Removable boxes, top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    /// Addable positions, top to bottom.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn remove(&self, b: Cell) -> Result<Self> {
        if !self.inner_corners().contains(&b) {
            return Err(Error::InvalidInput(format!("{b:?} is not an inner corner of {self}")));
        }
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        Ok(YoungDiagram { parts })
    }

    pub fn add(&self, b: Cell) -> Result<Self> {
        if !self.outer_corners().contains(&b) {
            return Err(Error::InvalidInput(format!("{b:?} is not an outer corner of {self}")));
        }
        let mut parts = self.parts.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Ok(YoungDiagram { parts })
    }

    /// λ⁻: one inner corner removed.
    pub fn minus(&self) -> Vec<Self> {
        self.inner_corners()
            .into_iter()
            .map(|b| self.remove(b).unwrap())
            .collect()
    }

    /// λ⁺: one outer corner added.
    pub fn plus(&self) -> Vec<Self> {
        self.outer_corners().into_iter().map(|b| self.add(b).unwrap()).collect()
    }

    /// The single box of `self / smaller`, if `smaller` is `self` minus one box.
    pub fn skew_box(&self, smaller: &Self) -> Option<Cell> {
        self.inner_corners()
            .into_iter()
            .find(|&b| self.remove(b).ok().as_ref() == Some(smaller))
    }

    pub fn is_contained_in(&self, o: &Self) -> bool {
        self.num_rows() <= o.num_rows() && self.parts.iter().zip(&o.parts).all(|(a, b)| a <= b)
    }

    /// Hook length product formula for f^λ.
    pub fn hook_formula(&self) -> u128 {
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let conj = self.conjugate();
        for b in self.cells() {
            let arm = self.row_len(b.row) - b.col;
            let leg = conj.row_len(b.col) - b.row;
            num /= (arm + leg + 1) as u128;
        }
        num
    }

    pub fn conjugate(&self) -> Self {
        let m = self.parts.first().copied().unwrap_or(0);
        YoungDiagram {
            parts: (1..=m)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    /// Accepts "2,1", "(2,1)", "[2,1]", and "", "0", "∅", "()" for the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(YoungDiagram::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("not a partition: {s:?}")))?;
        YoungDiagram::new(parts)
    }
}

/// Partitions of exactly r, in the diagram order.
pub fn partitions_of(r: usize) -> Vec<YoungDiagram> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rem == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Λ_{≤n}.
pub fn partitions_upto(n: usize) -> Vec<YoungDiagram> {
    (0..=n).flat_map(partitions_of).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CornerMode {
    /// λ⁻
    Minus,
    /// λ⁺ within Λ_{≤bound}
    PlusN,
    /// λ⁻ ∪ {λ} within Λ_{≤bound}
    MinusEq,
    /// λ⁺ ∪ {λ} within Λ_{≤bound}
    PlusEq,
    /// remove a box, then add one; one entry per route, so repeats occur
    MinusPlus,
}

pub fn corner_set(lambda: &YoungDiagram, mode: CornerMode, bound: usize) -> Vec<YoungDiagram> {
    let fits = |m: &YoungDiagram| m.size() <= bound;
    let mut out: Vec<YoungDiagram> = match mode {
        CornerMode::Minus => lambda.minus(),
        CornerMode::PlusN => lambda.plus().into_iter().filter(fits).collect(),
        CornerMode::MinusEq => {
            let mut v = lambda.minus();
            v.push(lambda.clone());
            v.into_iter().filter(fits).collect()
        }
        CornerMode::PlusEq => {
            let mut v = lambda.plus();
            v.push(lambda.clone());
            v.into_iter().filter(fits).collect()
        }
        CornerMode::MinusPlus => remove_add_routes(lambda).into_iter().map(|(_, m)| m).collect(),
    };
    out.sort();
    out
}

/// All (ω, μ) with ω ∈ λ⁻ and μ ∈ ω⁺.
pub fn remove_add_routes(lambda: &YoungDiagram) -> Vec<(YoungDiagram, YoungDiagram)> {
    let mut out: Vec<_> = lambda
        .minus()
        .into_iter()
        .flat_map(|w| w.plus().into_iter().map(move |m| (w.clone(), m)))
        .collect();
    out.sort();
    out
}

/// An n-standard tableau: distinct entries from {1..n}, increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct StandardTableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let t = StandardTableau { n, rows };
        if !t.check() {
            return Err(Error::InvalidInput(format!(
                "not an {n}-standard tableau: {:?}",
                t.rows
            )));
        }
        Ok(t)
    }

    fn check(&self) -> bool {
        let shape_ok =
            self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let mut seen = BTreeSet::new();
        let entries_ok = self
            .rows
            .iter()
            .flatten()
            .all(|&e| e >= 1 && e <= self.n && seen.insert(e));
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        shape_ok && entries_ok && rows_ok && cols_ok
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn position(&self, i: usize) -> Option<Cell> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&e| e == i).map(|c| Cell::new(r + 1, c + 1)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.position(i).is_some()
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// s_iL: exchange the letters i and i+1; `None` if the result is not standard.
    pub fn swap(&self, i: usize) -> Option<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| match e {
                        e if e == i => i + 1,
                        e if e == i + 1 => i,
                        e => e,
                    })
                    .collect()
            })
            .collect();
        let t = StandardTableau { n: self.n, rows };
        t.check().then_some(t)
    }

    /// Shapes at levels 0..=n of the growth sequence.
    pub fn path(&self) -> Vec<YoungDiagram> {
        (0..=self.n)
            .map(|j| YoungDiagram {
                parts: self
                    .rows
                    .iter()
                    .map(|r| r.iter().filter(|&&e| e <= j).count())
                    .filter(|&c| c > 0)
                    .collect(),
            })
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// τ^λ_n, ordered by growth sequence.
pub fn standard_tableaux(lambda: &YoungDiagram, n: usize) -> Result<Vec<StandardTableau>> {
    if lambda.size() > n {
        return Err(Error::InvalidInput(format!("|{lambda}| > {n}")));
    }
    fn go(shape: &YoungDiagram, m: usize) -> Vec<Vec<Vec<usize>>> {
        if shape.is_empty() {
            return vec![Vec::new()];
        }
        if m < shape.size() {
            return Vec::new();
        }
        let mut out = go(shape, m - 1);
        for b in shape.inner_corners() {
            for mut rows in go(&shape.remove(b).unwrap(), m - 1) {
                if rows.len() < b.row {
                    rows.push(Vec::new());
                }
                rows[b.row - 1].push(m);
                out.push(rows);
            }
        }
        out
    }
    let mut ts: Vec<StandardTableau> = go(lambda, n)
        .into_iter()
        .map(|rows| StandardTableau { n, rows })
        .collect();
    ts.sort_by_cached_key(|t| t.path());
    Ok(ts)
}

/// Number of standard Young tableaux of shape λ.
pub fn f_lambda(lambda: &YoungDiagram) -> u128 {
    fn go(shape: &YoungDiagram, memo: &mut HashMap<YoungDiagram, u128>) -> u128 {
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let v = shape.minus().iter().map(|s| go(s, memo)).sum();
        memo.insert(shape.clone(), v);
        v
    }
    go(lambda, &mut HashMap::new())
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Stirling number of the second kind.
pub fn stirling2(k: usize, r: usize) -> u128 {
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 0..k {
        for j in (1..=r).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[r]
}

pub fn bell(k: usize) -> u128 {
    (0..=k).map(|r| stirling2(k, r)).sum()
}

/// Calls `f` on every restricted growth string of length `len`, in lexicographic order.
pub fn for_each_rgs(len: usize, mut f: impl FnMut(&[u8])) {
    fn go(buf: &mut Vec<u8>, len: usize, max: u8, f: &mut dyn FnMut(&[u8])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        let top = if buf.is_empty() { 0 } else { max + 1 };
        for v in 0..=top {
            buf.push(v);
            go(buf, len, max.max(v), f);
            buf.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, 0, &mut f);
}

/// A set partition of {1..k}; blocks sorted, ordered by least element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        let all: Vec<usize> = {
            let mut v: Vec<usize> = blocks.iter().flatten().copied().collect();
            v.sort_unstable();
            v
        };
        if blocks.iter().any(Vec::is_empty) || all != (1..=k).collect::<Vec<_>>() {
            return Err(Error::InvalidInput(format!(
                "not a set partition of 1..{k}: {blocks:?}"
            )));
        }
        Ok(SetPartition { blocks })
    }

    pub fn from_rgs(rgs: &[u8]) -> Self {
        let nb = rgs.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); nb];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b as usize].push(i + 1);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn k(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_of(&self, i: usize) -> Option<&Vec<usize>> {
        self.blocks.iter().find(|b| b.contains(&i))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", bs.join(","))
    }
}

/// Set partitions of {1..k} with at least `min_blocks` blocks, in growth-string order.
pub fn set_partitions(k: usize, min_blocks: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_rgs(k, |r| {
        let p = SetPartition::from_rgs(r);
        if p.num_blocks() >= min_blocks {
            out.push(p);
        }
    });
    out
}

/// Maximum-entry order on disjoint nonempty sets.
pub fn max_entry_less(b1: &[usize], b2: &[usize]) -> Result<bool> {
    if b1.is_empty() || b2.is_empty() {
        return Err(Error::InvalidInput("empty block".into()));
    }
    if b1.iter().any(|x| b2.contains(x)) {
        return Err(Error::InvalidInput(format!("{b1:?} and {b2:?} overlap")));
    }
    Ok(b1.iter().max() < b2.iter().max())
}

/// A Young diagram filled with disjoint nonempty sets (each stored sorted).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetPartitionTableau {
    rows: Vec<Vec<Vec<usize>>>,
}

impl SetPartitionTableau {
    pub fn new(mut rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidInput("rows do not form a Young diagram".into()));
        }
        for b in rows.iter_mut().flatten() {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty entry".into()));
            }
            b.sort_unstable();
        }
        Ok(SetPartitionTableau { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Vec<usize>>> {
        &mut self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn get(&self, b: Cell) -> Option<&Vec<usize>> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?)
    }

    pub fn find(&self, letter: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|b| b.contains(&letter))
                .map(|c| Cell::new(r + 1, c + 1))
        })
    }

    pub fn letters(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().flatten().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Entries pairwise disjoint and rows/columns increasing in the maximum-entry order.
    pub fn is_standard(&self) -> bool {
        let letters = self.letters();
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let mx = |b: &Vec<usize>| *b.last().unwrap();
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| mx(&w[0]) < mx(&w[1])));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| mx(hi) < mx(lo)));
        rows_ok && cols_ok
    }
}

impl fmt::Display for SetPartitionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).unwrap())
    }
}

pub fn is_standard_spt(t: &SetPartitionTableau, k: usize) -> bool {
    t.letters() == (1..=k).collect::<Vec<_>>() && t.is_standard()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_partitions() {
        assert_eq!(partitions_upto(0), vec![YoungDiagram::empty()]);
        assert_eq!(partitions_upto(2), vec![yd(""), yd("1"), yd("2"), yd("1,1")]);
        assert_eq!(partitions_upto(3).len(), 7);
    }

    #[test]
    fn contents() {
        assert_eq!(content(Cell::new(1, 1)), 0);
        assert_eq!(content(Cell::new(1, 2)), 1);
        assert_eq!(content(Cell::new(3, 1)), -2);
    }

    #[test]
    fn corners() {
        assert_eq!(corner_set(&yd("1"), CornerMode::MinusPlus, 5), vec![yd("1")]);
        assert_eq!(corner_set(&yd("2"), CornerMode::MinusPlus, 5), vec![yd("2"), yd("1,1")]);
        assert_eq!(corner_set(&yd("1"), CornerMode::PlusN, 2), vec![yd("2"), yd("1,1")]);
        assert!(corner_set(&yd(""), CornerMode::Minus, 3).is_empty());
        assert_eq!(corner_set(&yd("2"), CornerMode::PlusN, 2), vec![]);
        assert_eq!(corner_set(&yd("2"), CornerMode::PlusEq, 2), vec![yd("2")]);
        assert_eq!(
            corner_set(&yd("2,1"), CornerMode::MinusEq, 3),
            vec![yd("2"), yd("1,1"), yd("2,1")]
        );
        assert_eq!(
            corner_set(&yd("2,1"), CornerMode::MinusPlus, 3),
            vec![yd("3"), yd("2,1"), yd("2,1"), yd("1,1,1")]
        );
    }

    #[test]
    fn tableaux() {
        let ts = standard_tableaux(&yd("2"), 3).unwrap();
        let rows: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows.len(), 3);
        for r in [vec![vec![1, 2]], vec![vec![1, 3]], vec![vec![2, 3]]] {
            assert!(rows.contains(&r));
        }
        assert_eq!(standard_tableaux(&yd(""), 4).unwrap().len(), 1);
        assert_eq!(standard_tableaux(&yd("1"), 2).unwrap().len(), 2);
        assert!(standard_tableaux(&yd("3"), 2).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(f_lambda(&yd("")), 1);
        assert_eq!(f_lambda(&yd("2,1")), 2);
        assert_eq!(f_lambda(&yd("2,2")), 2);
        assert_eq!(stirling2(3, 2), 3);
        assert_eq!(stirling2(4, 4), 1);
        assert_eq!(stirling2(4, 0), 0);
        assert_eq!(stirling2(0, 0), 1);
    }

    #[test]
    fn set_partition_lists() {
        let p = set_partitions(2, 1);
        assert_eq!(p[0].blocks(), &[vec![1, 2]]);
        assert_eq!(p[1].blocks(), &[vec![1], vec![2]]);
        assert_eq!(set_partitions(3, 3).len(), 1);
        assert_eq!(set_partitions(4, 1).len(), 15);
    }

    #[test]
    fn max_entry() {
        assert!(max_entry_less(&[1], &[2, 3]).unwrap());
        assert!(!max_entry_less(&[2, 5], &[4]).unwrap());
        assert!(max_entry_less(&[1, 2], &[1, 2]).is_err());
    }

    #[test]
    fn spt_standardness() {
        let col = |a: Vec<usize>, b: Vec<usize>| SetPartitionTableau::new(vec![vec![a], vec![b]]).unwrap();
        assert!(is_standard_spt(&col(vec![1], vec![2, 3]), 3));
        assert!(!is_standard_spt(&col(vec![2, 3], vec![1]), 3));
        let one = SetPartitionTableau::new(vec![vec![vec![1, 2, 3, 4]]]).unwrap();
        assert!(is_standard_spt(&one, 4));
        assert!(!is_standard_spt(&one, 5));
    }

    #[test]
    fn tableau_path_and_swap() {
        let t = StandardTableau::from_rows(vec![vec![2, 3]], 3).unwrap();
        assert_eq!(t.path(), vec![yd(""), yd(""), yd("1"), yd("2")]);
        assert!(t.swap(2).is_none());
        assert_eq!(t.swap(1).unwrap().rows(), &[vec![1, 3]]);
    }
}

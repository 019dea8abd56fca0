//! Row insertion on standard set tableaux under the maximum-entry order, and the
//! bijection between R̂(n)-paths and standard set-partition tableaux.

use crate::bratteli::GraphPath;
use crate::combinat::{is_standard_spt, set_partitions, standard_tableaux, Cell, SetPartitionTableau, YoungDiagram};
use crate::error::{Error, Result};
use crate::level::Level;

fn max_of(b: &[usize]) -> usize {
    *b.iter().max().expect("entries are nonempty")
}

/// Row-inserts `b`; returns the new tableau and the cell that was added.
pub fn insert_at(t: &SetPartitionTableau, b: &[usize]) -> Result<(SetPartitionTableau, Cell)> {
    if b.is_empty() {
        return Err(Error::InvalidInput("cannot insert an empty set".into()));
    }
    let letters = t.letters();
    if b.iter().any(|x| letters.binary_search(x).is_ok()) {
        return Err(Error::InvalidInput(format!("{b:?} meets the entries of {t}")));
    }
    let mut out = t.clone();
    let mut cur: Vec<usize> = b.to_vec();
    cur.sort_unstable();
    cur.dedup();
    let rows = out.rows_mut();
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![cur]);
            return Ok((out, Cell::new(r + 1, 1)));
        }
        let m = max_of(&cur);
        match rows[r].iter().position(|e| max_of(e) > m) {
            Some(c) => cur = std::mem::replace(&mut rows[r][c], cur),
            None => {
                rows[r].push(cur);
                let c = rows[r].len();
                return Ok((out, Cell::new(r + 1, c)));
            }
        }
    }
    unreachable!()
}

pub fn insert(t: &SetPartitionTableau, b: &[usize]) -> Result<SetPartitionTableau> {
    insert_at(t, b).map(|(t, _)| t)
}

/// Reverse bumping from an inner corner.
pub fn uninsert(t: &SetPartitionTableau, corner: Cell) -> Result<(SetPartitionTableau, Vec<usize>)> {
    if !t.shape().inner_corners().contains(&corner) {
        return Err(Error::InvalidInput(format!(
            "({},{}) is not an inner corner of {}",
            corner.row,
            corner.col,
            t.shape()
        )));
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut cur = rows[corner.row - 1].pop().expect("corner row is nonempty");
    if rows[corner.row - 1].is_empty() {
        rows.pop();
    }
    for r in (0..corner.row - 1).rev() {
        let m = max_of(&cur);
        let c = rows[r]
            .iter()
            .rposition(|e| max_of(e) < m)
            .ok_or_else(|| Error::InvalidInput(format!("{t} is not standard")))?;
        cur = std::mem::replace(&mut rows[r][c], cur);
    }
    Ok((out, cur))
}

/// Standard set-partition tableaux of shape λ over {1..k}, sorted.
pub fn standard_spts(lambda: &YoungDiagram, k: usize) -> Result<Vec<SetPartitionTableau>> {
    let r = lambda.size();
    if r == 0 || r > k {
        return Ok(if r == 0 && k == 0 {
            vec![SetPartitionTableau::empty()]
        } else {
            Vec::new()
        });
    }
    let syts = standard_tableaux(lambda, r)?;
    let mut out = Vec::new();
    for p in set_partitions(k, r).into_iter().filter(|p| p.num_blocks() == r) {
        let mut blocks: Vec<Vec<usize>> = p.blocks().to_vec();
        blocks.sort_by_key(|b| max_of(b));
        for s in &syts {
            let rows = s
                .rows()
                .iter()
                .map(|row| row.iter().map(|&e| blocks[e - 1].clone()).collect())
                .collect();
            out.push(SetPartitionTableau::new(rows)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Tableau to path: delete the box holding the largest letter, re-insert the rest of its block.
pub fn spt_to_path(t: &SetPartitionTableau, k: usize) -> Result<GraphPath> {
    if k == 0 || !is_standard_spt(t, k) {
        return Err(Error::InvalidInput(format!(
            "{t} is not a standard set-partition tableau over 1..{k}"
        )));
    }
    let mut shapes = vec![t.shape()];
    let mut labels = Vec::new();
    let mut cur = t.clone();
    for i in (2..=k).rev() {
        let corner = cur.find(i).expect("letter present");
        let (half, b) = remove_cell(&cur, corner);
        let rest: Vec<usize> = b.into_iter().filter(|&x| x != i).collect();
        if rest.is_empty() {
            labels.push(None);
            cur = half;
        } else {
            labels.push(Some(half.shape()));
            cur = insert(&half, &rest)?;
        }
        shapes.push(cur.shape());
    }
    shapes.reverse();
    labels.reverse();
    Ok(GraphPath {
        start: Level::integer(1),
        vertices: shapes,
        labels,
    })
}

/// Path to tableau, replaying growth and uninsert steps.
pub fn path_to_spt(p: &GraphPath) -> Result<SetPartitionTableau> {
    let one = YoungDiagram::new(vec![1])?;
    if p.start != Level::integer(1) || p.vertices.first() != Some(&one) {
        return Err(Error::InvalidInput("path must start at (1) on level 1".into()));
    }
    if p.labels.len() + 1 != p.vertices.len() {
        return Err(Error::InvalidInput("label count".into()));
    }
    let mut t = SetPartitionTableau::new(vec![vec![vec![1]]])?;
    for (j, w) in p.vertices.windows(2).enumerate() {
        let i = j + 2;
        let (prev, next) = (&w[0], &w[1]);
        if next.size() == prev.size() + 1 {
            let cell = next
                .skew_box(prev)
                .ok_or_else(|| Error::InvalidInput(format!("{prev} → {next} adds no single box")))?;
            t = place(&t, cell, vec![i])?;
            continue;
        }
        if next.size() != prev.size() {
            return Err(Error::InvalidInput(format!("{prev} → {next} is not an R̂ step")));
        }
        let mid = match &p.labels[j] {
            Some(m) => m.clone(),
            None => {
                let mids: Vec<YoungDiagram> = prev
                    .minus()
                    .into_iter()
                    .filter(|m| next.skew_box(m).is_some())
                    .collect();
                match mids.as_slice() {
                    [m] => m.clone(),
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "step {prev} → {next} needs its intermediate shape"
                        )))
                    }
                }
            }
        };
        let (removed, added) = match (prev.skew_box(&mid), next.skew_box(&mid)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "{mid} does not sit between {prev} and {next}"
                )))
            }
        };
        let (half, mut b) = uninsert(&t, removed)?;
        b.push(i);
        t = place(&half, added, b)?;
    }
    Ok(t)
}

fn remove_cell(t: &SetPartitionTableau, cell: Cell) -> (SetPartitionTableau, Vec<usize>) {
    let mut out = t.clone();
    let rows = out.rows_mut();
    let b = rows[cell.row - 1].remove(cell.col - 1);
    if rows[cell.row - 1].is_empty() {
        rows.remove(cell.row - 1);
    }
    (out, b)
}

fn place(t: &SetPartitionTableau, cell: Cell, b: Vec<usize>) -> Result<SetPartitionTableau> {
    let mut rows = t.rows().to_vec();
    if cell.row == rows.len() + 1 {
        rows.push(Vec::new());
    }
    match rows.get_mut(cell.row - 1) {
        Some(row) if row.len() + 1 == cell.col => row.push(b),
        _ => return Err(Error::InvalidInput("cell is not an outer corner".into())),
    }
    SetPartitionTableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::rhat;

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn spt(rows: Vec<Vec<Vec<usize>>>) -> SetPartitionTableau {
        SetPartitionTableau::new(rows).unwrap()
    }

    #[test]
    fn insert_basics() {
        let t = insert(&SetPartitionTableau::empty(), &[1]).unwrap();
        assert_eq!(t, spt(vec![vec![vec![1]]]));
        let (t2, c) = insert_at(&t, &[2]).unwrap();
        assert_eq!(t2, spt(vec![vec![vec![1], vec![2]]]));
        assert_eq!(uninsert(&t2, c).unwrap(), (t.clone(), vec![2]));
        assert!(insert(&t, &[1, 3]).is_err());
        assert!(uninsert(&t2, Cell::new(1, 1)).is_err());
    }

    #[test]
    fn worked_paths() {
        let g = rhat(3, 3);
        for (shapes, rows) in [
            (["1", "2", "1,1"], vec![vec![vec![1]], vec![vec![2, 3]]]),
            (["1", "1,1", "1,1"], vec![vec![vec![2]], vec![vec![1, 3]]]),
            (["1", "1", "1,1"], vec![vec![vec![1, 2]], vec![vec![3]]]),
        ] {
            let shapes: Vec<YoungDiagram> = shapes.iter().map(|s| yd(s)).collect();
            let p = g.path_from_shapes(Level::integer(1), &shapes).unwrap();
            let t = path_to_spt(&p).unwrap();
            assert_eq!(t, spt(rows));
            assert_eq!(spt_to_path(&t, 3).unwrap(), p);
        }
    }

    #[test]
    fn bijection_level_three() {
        let g = rhat(3, 3);
        for l in &g.vertices[2] {
            let paths = g
                .enumerate_paths((Level::integer(1), &yd("1")), (Level::integer(3), l), 1000)
                .unwrap();
            let mut tabs: Vec<SetPartitionTableau> = paths.iter().map(|p| path_to_spt(p).unwrap()).collect();
            for (p, t) in paths.iter().zip(&tabs) {
                assert_eq!(&spt_to_path(t, 3).unwrap(), p);
            }
            tabs.sort();
            assert_eq!(tabs, standard_spts(l, 3).unwrap());
        }
    }
}

//! Graded graphs: the rook tower, R̂(n) and Î, with path counting and the
//! path/tableau correspondence.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::combinat::{corner_set, partitions_upto, remove_add_routes, CornerMode, StandardTableau, YoungDiagram};
use crate::error::{Error, Result};
use crate::level::Level;

/// One edge between consecutive levels; parallel edges carry distinct labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Intermediate shape of a remove-then-add step in R̂(n).
    pub label: Option<YoungDiagram>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    RookTower,
    RHat,
    IHat,
}

#[derive(Clone, Debug)]
pub struct GradedGraph {
    pub kind: GraphKind,
    pub levels: Vec<Level>,
    pub vertices: Vec<Vec<YoungDiagram>>,
    /// `edges[i]` joins level i to level i+1.
    pub edges: Vec<Vec<Edge>>,
}

/// Vertices at consecutive levels, with the edge label used at each step.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GraphPath {
    pub start: Level,
    pub vertices: Vec<YoungDiagram>,
    pub labels: Vec<Option<YoungDiagram>>,
}

impl GraphPath {
    pub fn end(&self) -> &YoungDiagram {
        self.vertices.last().expect("paths are nonempty")
    }
}

impl GradedGraph {
    fn new(kind: GraphKind, levels: Vec<Level>, vertices: Vec<Vec<YoungDiagram>>) -> Self {
        let nl = levels.len();
        GradedGraph {
            kind,
            levels,
            vertices,
            edges: vec![Vec::new(); nl.saturating_sub(1)],
        }
    }

    pub fn level_index(&self, t: Level) -> Option<usize> {
        self.levels.iter().position(|&l| l == t)
    }

    pub fn vertex_index(&self, li: usize, l: &YoungDiagram) -> Option<usize> {
        self.vertices.get(li)?.iter().position(|v| v == l)
    }

    fn add_edge(&mut self, li: usize, a: &YoungDiagram, b: &YoungDiagram, label: Option<YoungDiagram>) {
        if let (Some(from), Some(to)) = (self.vertex_index(li, a), self.vertex_index(li + 1, b)) {
            self.edges[li].push(Edge { from, to, label });
        }
    }

    pub fn vertex_count(&self, t: Level) -> usize {
        self.level_index(t).map_or(0, |i| self.vertices[i].len())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Edges joining `a` at level index `li` to `b` at `li + 1`.
    pub fn edges_between(&self, li: usize, a: &YoungDiagram, b: &YoungDiagram) -> Vec<&Edge> {
        match (self.vertex_index(li, a), self.vertex_index(li + 1, b)) {
            (Some(x), Some(y)) => self.edges[li].iter().filter(|e| e.from == x && e.to == y).collect(),
            _ => Vec::new(),
        }
    }

    /// Neighbours one level up.
    pub fn up_neighbors(&self, li: usize, a: &YoungDiagram) -> Vec<YoungDiagram> {
        let Some(x) = self.vertex_index(li, a) else {
            return Vec::new();
        };
        self.edges
            .get(li)
            .map(|es| {
                es.iter()
                    .filter(|e| e.from == x)
                    .map(|e| self.vertices[li + 1][e.to].clone())
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Neighbours one level down, with repetition for parallel edges.
    pub fn down_neighbors(&self, li: usize, a: &YoungDiagram) -> Vec<YoungDiagram> {
        let Some(y) = self.vertex_index(li, a) else {
            return Vec::new();
        };
        if li == 0 {
            return Vec::new();
        }
        self.edges[li - 1]
            .iter()
            .filter(|e| e.to == y)
            .map(|e| self.vertices[li - 1][e.from].clone())
            .collect()
    }

    /// No two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|es| {
            let mut pairs: Vec<(usize, usize)> = es.iter().map(|e| (e.from, e.to)).collect();
            let n = pairs.len();
            pairs.sort_unstable();
            pairs.dedup();
            pairs.len() == n
        })
    }

    fn locate(&self, t: Level, l: &YoungDiagram) -> Result<(usize, usize)> {
        let li = self
            .level_index(t)
            .ok_or_else(|| Error::InvalidInput(format!("no level {t}")))?;
        let vi = self
            .vertex_index(li, l)
            .ok_or_else(|| Error::InvalidInput(format!("{l} is not a vertex at level {t}")))?;
        Ok((li, vi))
    }

    /// Number of paths, counting parallel edges separately.
    pub fn count_paths(&self, from: (Level, &YoungDiagram), to: (Level, &YoungDiagram)) -> Result<u128> {
        let (l0, v0) = self.locate(from.0, from.1)?;
        let (l1, v1) = self.locate(to.0, to.1)?;
        if l1 < l0 {
            return Ok(0);
        }
        let mut counts = vec![0u128; self.vertices[l0].len()];
        counts[v0] = 1;
        for li in l0..l1 {
            let mut next = vec![0u128; self.vertices[li + 1].len()];
            for e in &self.edges[li] {
                next[e.to] += counts[e.from];
            }
            counts = next;
        }
        Ok(counts[v1])
    }

    /// Path counts from one vertex to every vertex of a later level.
    pub fn path_counts(&self, from: (Level, &YoungDiagram), to: Level) -> Result<Vec<(YoungDiagram, u128)>> {
        let li = self
            .level_index(to)
            .ok_or_else(|| Error::InvalidInput(format!("no level {to}")))?;
        self.vertices[li]
            .iter()
            .map(|v| Ok((v.clone(), self.count_paths(from, (to, v))?)))
            .collect()
    }

    pub fn enumerate_paths(
        &self,
        from: (Level, &YoungDiagram),
        to: (Level, &YoungDiagram),
        ceiling: u128,
    ) -> Result<Vec<GraphPath>> {
        let total = self.count_paths(from, to)?;
        if total > ceiling {
            return Err(Error::GuardExceeded(format!(
                "{total} paths exceed the ceiling {ceiling}"
            )));
        }
        let (l0, v0) = self.locate(from.0, from.1)?;
        let (l1, v1) = self.locate(to.0, to.1)?;
        let mut out = Vec::new();
        if l1 < l0 {
            return Ok(out);
        }
        let mut stack: Vec<(usize, Vec<usize>, Vec<Option<YoungDiagram>>)> = vec![(l0, vec![v0], Vec::new())];
        while let Some((li, vs, labels)) = stack.pop() {
            let cur = *vs.last().unwrap();
            if li == l1 {
                if cur == v1 {
                    out.push(GraphPath {
                        start: from.0,
                        vertices: vs
                            .iter()
                            .enumerate()
                            .map(|(j, &v)| self.vertices[l0 + j][v].clone())
                            .collect(),
                        labels,
                    });
                }
                continue;
            }
            for e in self.edges[li].iter().filter(|e| e.from == cur) {
                let mut vs2 = vs.clone();
                vs2.push(e.to);
                let mut lb2 = labels.clone();
                lb2.push(e.label.clone());
                stack.push((li + 1, vs2, lb2));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Builds a path from its shapes; fails if a step is missing or has parallel edges.
    pub fn path_from_shapes(&self, start: Level, shapes: &[YoungDiagram]) -> Result<GraphPath> {
        let l0 = self
            .level_index(start)
            .ok_or_else(|| Error::InvalidInput(format!("no level {start}")))?;
        if shapes.is_empty() {
            return Err(Error::InvalidInput("empty path".into()));
        }
        self.locate(start, &shapes[0])?;
        let mut labels = Vec::new();
        for (j, w) in shapes.windows(2).enumerate() {
            if l0 + j + 1 >= self.levels.len() {
                return Err(Error::InvalidInput("path runs past the last level".into()));
            }
            let es = self.edges_between(l0 + j, &w[0], &w[1]);
            match es.as_slice() {
                [] => return Err(Error::InvalidInput(format!("no edge {} → {}", w[0], w[1]))),
                [e] => labels.push(e.label.clone()),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "step {} → {} is ambiguous; give the intermediate shape",
                        w[0], w[1]
                    )))
                }
            }
        }
        Ok(GraphPath {
            start,
            vertices: shapes.to_vec(),
            labels,
        })
    }

    pub fn validate_path(&self, p: &GraphPath) -> Result<()> {
        let l0 = self
            .level_index(p.start)
            .ok_or_else(|| Error::InvalidInput(format!("no level {}", p.start)))?;
        if p.labels.len() + 1 != p.vertices.len() {
            return Err(Error::InvalidInput("label count".into()));
        }
        self.locate(p.start, &p.vertices[0])?;
        for (j, w) in p.vertices.windows(2).enumerate() {
            if l0 + j + 1 >= self.levels.len()
                || !self
                    .edges_between(l0 + j, &w[0], &w[1])
                    .iter()
                    .any(|e| e.label == p.labels[j])
            {
                return Err(Error::InvalidInput(format!("no edge {} → {} at step {j}", w[0], w[1])));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let name = match self.kind {
            GraphKind::RookTower => "rook_tower",
            GraphKind::RHat => "rhat",
            GraphKind::IHat => "ihat",
        };
        let mut s = format!("graph {name} {{\n  rankdir=TB;\n");
        for (li, vs) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  subgraph level_{li} {{ rank=same;");
            for (vi, v) in vs.iter().enumerate() {
                let _ = writeln!(s, "    v{li}_{vi} [label=\"{v}\\n@{}\"];", self.levels[li]);
            }
            let _ = writeln!(s, "  }}");
        }
        for (li, es) in self.edges.iter().enumerate() {
            for e in es {
                match &e.label {
                    Some(w) => {
                        let _ = writeln!(s, "  v{li}_{} -- v{}_{} [label=\"{w}\"];", e.from, li + 1, e.to);
                    }
                    None => {
                        let _ = writeln!(s, "  v{li}_{} -- v{}_{};", e.from, li + 1, e.to);
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .enumerate()
            .map(|(li, t)| {
                json!({
                    "level": t.to_string(),
                    "vertices": self.vertices[li].iter().map(|v| v.parts().to_vec()).collect::<Vec<_>>(),
                    "edges_up": self.edges.get(li).map(|es| es.iter().map(|e| json!({
                        "from": e.from,
                        "to": e.to,
                        "via": e.label.as_ref().map(|w| w.parts().to_vec()),
                    })).collect::<Vec<_>>()).unwrap_or_default(),
                })
            })
            .collect();
        json!({ "levels": levels })
    }
}

/// Levels 0..n; level m is Λ_{≤m}; λ(m) — ν(m+1) iff ν = λ or ν ∈ λ⁺.
pub fn rook_tower(n: usize) -> GradedGraph {
    let levels = (0..=n as u32).map(Level::integer).collect();
    let vertices = (0..=n).map(partitions_upto).collect();
    let mut g = GradedGraph::new(GraphKind::RookTower, levels, vertices);
    for m in 0..n {
        for l in partitions_upto(m) {
            for nu in corner_set(&l, CornerMode::PlusEq, m + 1) {
                g.add_edge(m, &l, &nu, None);
            }
        }
    }
    g
}

/// Levels 1..kmax with 1 ≤ |λ| ≤ min(k, n); remove-then-add edges are labelled by the
/// intermediate shape, add edges are unlabelled.
pub fn rhat(n: usize, kmax: usize) -> GradedGraph {
    let levels = (1..=kmax as u32).map(Level::integer).collect();
    let vertices: Vec<Vec<YoungDiagram>> = (1..=kmax)
        .map(|k| {
            partitions_upto(k.min(n))
                .into_iter()
                .filter(|l| !l.is_empty())
                .collect()
        })
        .collect();
    let mut g = GradedGraph::new(GraphKind::RHat, levels, vertices.clone());
    for (li, layer) in vertices.iter().enumerate().take(kmax.saturating_sub(1)) {
        for l in layer {
            for (w, m) in remove_add_routes(l) {
                g.add_edge(li, l, &m, Some(w));
            }
            for m in corner_set(l, CornerMode::PlusN, n) {
                g.add_edge(li, l, &m, None);
            }
        }
    }
    g
}

/// Levels ½, 1, 3/2, ..., tmax: Î_½ = {∅}, Î_k = Λ_{≤k} ∖ {∅}, Î_{k+½} = Λ_{≤k}.
pub fn ihat(tmax: Level) -> GradedGraph {
    let levels: Vec<Level> = tmax.up_to().collect();
    let vertices: Vec<Vec<YoungDiagram>> = levels
        .iter()
        .map(|t| {
            if *t == Level::HALF {
                vec![YoungDiagram::empty()]
            } else if t.is_integer() {
                partitions_upto(t.floor() as usize)
                    .into_iter()
                    .filter(|l| !l.is_empty())
                    .collect()
            } else {
                partitions_upto(t.floor() as usize)
            }
        })
        .collect();
    let mut g = GradedGraph::new(GraphKind::IHat, levels.clone(), vertices.clone());
    for li in 0..levels.len().saturating_sub(1) {
        let t = levels[li];
        for a in &vertices[li] {
            if t == Level::HALF {
                g.add_edge(li, a, &YoungDiagram::new(vec![1]).unwrap(), None);
            } else if t.is_integer() {
                let mut targets = a.minus();
                targets.push(a.clone());
                for b in targets {
                    g.add_edge(li, a, &b, None);
                }
            } else {
                for b in a.plus() {
                    g.add_edge(li, a, &b, None);
                }
            }
        }
    }
    g
}

/// Growth sequence to tableau: entry m goes in the box added at step m.
pub fn path_to_tableau(p: &GraphPath) -> Result<StandardTableau> {
    if p.start != Level::integer(0) || !p.vertices[0].is_empty() {
        return Err(Error::InvalidInput("path must start at ∅ on level 0".into()));
    }
    let n = p.vertices.len() - 1;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (m, w) in p.vertices.windows(2).enumerate() {
        if w[0] == w[1] {
            continue;
        }
        let b = w[1]
            .skew_box(&w[0])
            .ok_or_else(|| Error::InvalidInput(format!("{} → {} is not a rook-tower step", w[0], w[1])))?;
        if rows.len() < b.row {
            rows.push(Vec::new());
        }
        rows[b.row - 1].push(m + 1);
    }
    StandardTableau::from_rows(rows, n)
}

pub fn tableau_to_path(t: &StandardTableau) -> GraphPath {
    let vertices = t.path();
    GraphPath {
        start: Level::integer(0),
        labels: vec![None; vertices.len() - 1],
        vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn rook_tower_shape() {
        let g = rook_tower(3);
        assert_eq!(g.vertex_count(Level::integer(3)), 7);
        assert_eq!(g.up_neighbors(1, &yd("")), vec![yd(""), yd("1")]);
        assert_eq!(
            g.count_paths((Level::integer(0), &yd("")), (Level::integer(3), &yd("2")))
                .unwrap(),
            3
        );
        assert!(g.is_simple());
    }

    #[test]
    fn rhat_shape() {
        let g = rhat(3, 3);
        assert_eq!(g.vertex_count(Level::integer(3)), 6);
        let mut up = g.up_neighbors(1, &yd("1,1"));
        up.sort();
        up.dedup();
        assert_eq!(up, vec![yd("2"), yd("1,1"), yd("2,1"), yd("1,1,1")]);
        assert_eq!(
            g.count_paths((Level::integer(1), &yd("1")), (Level::integer(3), &yd("2")))
                .unwrap(),
            3
        );
    }

    #[test]
    fn ihat_shape() {
        let g = ihat(Level::integer(3));
        assert_eq!(g.vertex_count(Level::half(2)), 4);
        assert_eq!(g.vertex_count(Level::integer(3)), 6);
        let li = g.level_index(Level::half(2)).unwrap();
        assert_eq!(g.edges_between(li, &yd(""), &yd("1")).len(), 1);
        assert!(g.edges_between(li, &yd(""), &yd("2")).is_empty());
        let counts = g.path_counts((Level::HALF, &yd("")), Level::integer(3)).unwrap();
        assert_eq!(counts.iter().map(|(_, c)| c * c).sum::<u128>(), 25);
        assert_eq!(
            g.count_paths((Level::HALF, &yd("")), (Level::integer(3), &yd("1")))
                .unwrap(),
            1
        );
        assert!(g.is_simple());
    }

    #[test]
    fn paths_and_tableaux() {
        let g = rook_tower(3);
        let p = g
            .path_from_shapes(Level::integer(0), &[yd(""), yd("1"), yd("2"), yd("2")])
            .unwrap();
        assert_eq!(path_to_tableau(&p).unwrap().rows(), &[vec![1, 2]]);
        let p = g
            .path_from_shapes(Level::integer(0), &[yd(""), yd(""), yd("1"), yd("2")])
            .unwrap();
        assert_eq!(path_to_tableau(&p).unwrap().rows(), &[vec![2, 3]]);
        let one = g
            .count_paths((Level::integer(2), &yd("1")), (Level::integer(2), &yd("1")))
            .unwrap();
        assert_eq!(one, 1);
    }

    #[test]
    fn ceiling_enforced() {
        let g = rhat(3, 4);
        let from = (Level::integer(1), &yd("1"));
        let target = yd("2,1");
        assert!(g.enumerate_paths(from, (Level::integer(4), &target), 1).is_err());
    }
}

//! Simplicial sets truncated at dimension 3, simplicial maps and
//! combinatorial homotopies between them.
//!
//! A [`TruncSSet`] carries simplices of dimensions 0 to 3 with all face and
//! degeneracy operators among them. When it is flagged coskeletal, simplices
//! of dimension 4 and above are the compatible families of faces; in
//! particular every 3-simplex is determined by its boundary.

mod classic;
mod enumerate;
mod homotopy;
mod map;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use classic::classic_nerve;
pub use enumerate::{
    enumerate_simplicial_maps, enumerate_simplicial_maps_over, enumerate_homotopies, find_homotopy, homotopy_classes,
    homotopy_classes_over, MapClasses,
};
pub use homotopy::{Homotopy, HomotopyData};
pub use map::{spine_map, SimplicialMap};

use crate::error::{ValidationErrors, Violation};
use crate::format::{OperatorEntry, SSetFile};

/// Highest stored dimension.
pub const TOP: usize = 3;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSSet {
    names: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    // faces[n][i][x] = d_i x for x in S_n (faces[0] is empty)
    faces: Vec<Vec<Vec<usize>>>,
    // degens[n][i][x] = s_i x for x in S_n, n < TOP
    degens: Vec<Vec<Vec<usize>>>,
    coskeletal: bool,
    // boundary[n]: face tuple -> simplices of S_n with that boundary
    boundary: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl fmt::Debug for TruncSSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSSet")
            .field("sizes", &self.sizes())
            .field("coskeletal", &self.coskeletal)
            .finish()
    }
}

fn op_name(d: bool, i: usize) -> String {
    format!("{}_{i}", if d { "d" } else { "s" })
}

impl TruncSSet {
    /// Checks the interchange document: complete operator tables, the
    /// simplicial identities wherever both sides stay in dimensions ≤ 3 and,
    /// for coskeletal sets, that distinct 3-simplices have distinct
    /// boundaries.
    pub fn validate(raw: &SSetFile) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        if raw.simplices.len() != TOP + 1 {
            errs.push(Violation::new(
                "level mismatch",
                format!("expected {} levels of simplices, found {}", TOP + 1, raw.simplices.len()),
            ));
            return Err(errs);
        }
        let mut names = Vec::new();
        let mut index = Vec::new();
        for (n, level) in raw.simplices.iter().enumerate() {
            let mut sorted = level.clone();
            sorted.sort();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    errs.push(
                        Violation::new("duplicate identifier", format!("simplex listed twice at level {n}"))
                            .with([w[0].clone()]),
                    );
                }
            }
            sorted.dedup();
            index.push(sorted.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect::<HashMap<_, _>>());
            names.push(sorted);
        }
        if names[0].is_empty() && names.iter().any(|l| !l.is_empty()) {
            errs.push(Violation::new("level mismatch", "simplices without vertices"));
        }

        let mut faces: Vec<Vec<Vec<Option<usize>>>> =
            (0..=TOP).map(|n| if n == 0 { Vec::new() } else { vec![vec![None; names[n].len()]; n + 1] }).collect();
        let mut degens: Vec<Vec<Vec<Option<usize>>>> =
            (0..TOP).map(|n| vec![vec![None; names[n].len()]; n + 1]).collect();
        let fill = |table: &mut Vec<Vec<Vec<Option<usize>>>>,
                        e: &OperatorEntry,
                        is_face: bool,
                        errs: &mut ValidationErrors| {
            let ok_level = if is_face { (1..=TOP).contains(&e.level) } else { e.level < TOP };
            if !ok_level || e.index > e.level {
                errs.push(
                    Violation::new(
                        "level mismatch",
                        format!("{} at level {} is not an operator of the truncation", op_name(is_face, e.index), e.level),
                    )
                    .with([e.from.clone()]),
                );
                return;
            }
            let to_level = if is_face { e.level - 1 } else { e.level + 1 };
            let (Some(&x), Some(&y)) = (index[e.level].get(&e.from), index[to_level].get(&e.to)) else {
                errs.push(
                    Violation::new("dangling identifier", format!("{} refers to an unknown simplex", op_name(is_face, e.index)))
                        .with([e.from.clone(), e.to.clone()]),
                );
                return;
            };
            let slot = &mut table[e.level][e.index][x];
            if slot.is_some_and(|old| old != y) {
                errs.push(
                    Violation::new("conflicting entry", format!("{} given twice", op_name(is_face, e.index)))
                        .with([e.from.clone()]),
                );
            }
            *slot = Some(y);
        };
        for e in &raw.faces {
            fill(&mut faces, e, true, &mut errs);
        }
        for e in &raw.degens {
            fill(&mut degens, e, false, &mut errs);
        }
        let complete = |table: Vec<Vec<Vec<Option<usize>>>>, is_face: bool, errs: &mut ValidationErrors| {
            table
                .into_iter()
                .enumerate()
                .map(|(n, ops)| {
                    ops.into_iter()
                        .enumerate()
                        .map(|(i, col)| {
                            col.into_iter()
                                .enumerate()
                                .map(|(x, v)| {
                                    v.unwrap_or_else(|| {
                                        errs.push(
                                            Violation::new(
                                                "partial table",
                                                format!("{} undefined at level {n}", op_name(is_face, i)),
                                            )
                                            .with([names[n][x].clone()]),
                                        );
                                        0
                                    })
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect::<Vec<Vec<Vec<usize>>>>()
        };
        let faces = complete(faces, true, &mut errs);
        let degens = complete(degens, false, &mut errs);
        if !errs.is_empty() {
            return Err(errs);
        }
        let set = Self::assemble(names, index, faces, degens, raw.coskeletal);
        set.check_identities(&mut errs);
        errs.into_result(|| set)
    }

    fn assemble(
        names: Vec<Vec<String>>,
        index: Vec<HashMap<String, usize>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
        coskeletal: bool,
    ) -> Self {
        let mut boundary = vec![HashMap::new()];
        for n in 1..=TOP {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for x in 0..names[n].len() {
                m.entry((0..=n).map(|i| faces[n][i][x]).collect()).or_default().push(x);
            }
            boundary.push(m);
        }
        Self {
            names,
            index,
            faces,
            degens,
            coskeletal,
            boundary,
        }
    }

    fn check_identities(&self, errs: &mut ValidationErrors) {
        let w = |n: usize, x: usize| format!("{}@{n}", self.names[n][x]);
        for n in 2..=TOP {
            for x in 0..self.size(n) {
                for j in 1..=n {
                    for i in 0..j {
                        if self.face(n - 1, i, self.face(n, j, x)) != self.face(n - 1, j - 1, self.face(n, i, x)) {
                            errs.push(
                                Violation::new(format!("d_{i} d_{j} = d_{} d_{i}", j - 1), "face identity fails")
                                    .with([w(n, x)]),
                            );
                        }
                    }
                }
            }
        }
        for n in 0..TOP {
            for x in 0..self.size(n) {
                for j in 0..=n {
                    let y = self.degen(n, j, x);
                    if self.face(n + 1, j, y) != x || self.face(n + 1, j + 1, y) != x {
                        errs.push(
                            Violation::new(format!("d_{j} s_{j} = d_{} s_{j} = id", j + 1), "degeneracy is not a section")
                                .with([w(n, x)]),
                        );
                    }
                    for i in 0..=n + 1 {
                        if n == 0 || i == j || i == j + 1 {
                            continue;
                        }
                        let lhs = self.face(n + 1, i, y);
                        let rhs = if i < j {
                            self.degen(n - 1, j - 1, self.face(n, i, x))
                        } else {
                            self.degen(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            let law = if i < j {
                                format!("d_{i} s_{j} = s_{} d_{i}", j - 1)
                            } else {
                                format!("d_{i} s_{j} = s_{j} d_{}", i - 1)
                            };
                            errs.push(Violation::new(law, "mixed identity fails").with([w(n, x)]));
                        }
                    }
                    if n + 2 <= TOP {
                        for i in 0..=j {
                            if self.degen(n + 1, i, y) != self.degen(n + 1, j + 1, self.degen(n, i, x)) {
                                errs.push(
                                    Violation::new(format!("s_{i} s_{j} = s_{} s_{i}", j + 1), "degeneracy identity fails")
                                        .with([w(n, x)]),
                                );
                            }
                        }
                    }
                }
            }
        }
        if self.coskeletal {
            for (faces, xs) in &self.boundary[TOP] {
                if xs.len() > 1 {
                    let _ = faces;
                    errs.push(
                        Violation::new("coskeletal boundary", "distinct 3-simplices share a boundary")
                            .with(xs.iter().map(|&x| w(TOP, x))),
                    );
                }
            }
        }
    }

    /// Builds a set from named simplices and operator functions on names,
    /// then validates it.
    pub(crate) fn from_named(
        levels: Vec<Vec<String>>,
        face: impl Fn(usize, usize, usize) -> String,
        degen: impl Fn(usize, usize, usize) -> String,
        coskeletal: bool,
    ) -> Result<Self, ValidationErrors> {
        let mut raw = SSetFile {
            simplices: levels,
            coskeletal,
            ..Default::default()
        };
        for n in 0..=TOP {
            for x in 0..raw.simplices[n].len() {
                let from = &raw.simplices[n][x];
                if n > 0 {
                    for i in 0..=n {
                        raw.faces.push(OperatorEntry {
                            level: n,
                            index: i,
                            from: from.clone(),
                            to: face(n, i, x),
                        });
                    }
                }
                if n < TOP {
                    for i in 0..=n {
                        raw.degens.push(OperatorEntry {
                            level: n,
                            index: i,
                            from: from.clone(),
                            to: degen(n, i, x),
                        });
                    }
                }
            }
        }
        Self::validate(&raw)
    }

    pub fn to_file(&self) -> SSetFile {
        let mut raw = SSetFile {
            simplices: self.names.clone(),
            coskeletal: self.coskeletal,
            ..Default::default()
        };
        for n in 0..=TOP {
            for x in 0..self.size(n) {
                if n > 0 {
                    for i in 0..=n {
                        raw.faces.push(OperatorEntry {
                            level: n,
                            index: i,
                            from: self.names[n][x].clone(),
                            to: self.names[n - 1][self.face(n, i, x)].clone(),
                        });
                    }
                }
                if n < TOP {
                    for i in 0..=n {
                        raw.degens.push(OperatorEntry {
                            level: n,
                            index: i,
                            from: self.names[n][x].clone(),
                            to: self.names[n + 1][self.degen(n, i, x)].clone(),
                        });
                    }
                }
            }
        }
        raw
    }

    pub fn size(&self, n: usize) -> usize {
        self.names[n].len()
    }

    pub fn sizes(&self) -> [usize; TOP + 1] {
        [self.size(0), self.size(1), self.size(2), self.size(3)]
    }

    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.names[n][x]
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn find(&self, n: usize, name: &str) -> Option<usize> {
        self.index[n].get(name).copied()
    }

    /// `d_i x` for `x` in `S_n`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    /// `s_i x` for `x` in `S_n`, `n < 3`.
    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    pub fn faces_of(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|i| self.face(n, i, x)).collect()
    }

    /// Simplices of `S_n` with the given faces `d_0, …, d_n`.
    pub fn with_boundary(&self, n: usize, faces: &[usize]) -> &[usize] {
        self.boundary[n].get(faces).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_coskeletal(&self) -> bool {
        self.coskeletal
    }

    /// Some `(i, y)` with `x = s_i y`, the smallest such `i`, if `x` is
    /// degenerate.
    pub fn degeneracy_of(&self, n: usize, x: usize) -> Option<(usize, usize)> {
        if n == 0 {
            return None;
        }
        (0..n).find_map(|i| {
            let y = self.face(n, i, x);
            (self.degen(n - 1, i, y) == x).then_some((i, y))
        })
    }

    /// The iterated degeneracy `s_0 ⋯ s_0 v` of a vertex in `S_n`.
    pub fn degenerate_vertex(&self, n: usize, v: usize) -> usize {
        (0..n).fold(v, |x, k| self.degen(k, 0, x))
    }

    /// Vertices of `x`, in order: vertex `k` is opposite to all faces but
    /// the `k`-th.
    pub fn vertices(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n)
            .map(|k| {
                let mut y = x;
                for m in (1..=n).rev() {
                    // drop the last vertex until k is last, then drop the front
                    y = if m > k { self.face(m, m, y) } else { self.face(m, 0, y) };
                }
                y
            })
            .collect()
    }

    /// The edges between consecutive vertices of `x ∈ S_n`, `n ≥ 1`.
    pub fn spine(&self, n: usize, x: usize) -> Vec<usize> {
        (0..n)
            .map(|k| {
                let mut y = x;
                for m in (2..=n).rev() {
                    y = if m > k + 1 { self.face(m, m, y) } else { self.face(m, 0, y) };
                }
                y
            })
            .collect()
    }

    /// Number of connected components of the graph of vertices and edges.
    pub fn vertex_components(&self) -> usize {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(self.size(0));
        for e in 0..self.size(1) {
            uf.union(self.face(1, 0, e), self.face(1, 1, e));
        }
        uf.into_labeling().into_iter().collect::<HashSet<_>>().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The standard simplex Δ[1]: n-simplices are monotone words in {0,1}.
    pub(crate) fn delta1() -> TruncSSet {
        let levels: Vec<Vec<String>> = (0..=TOP)
            .map(|n| (0..=n + 1).map(|ones| "0".repeat(n + 1 - ones) + &"1".repeat(ones)).collect())
            .collect();
        let word = |n: usize, x: usize| levels[n][x].clone();
        TruncSSet::from_named(
            levels.clone(),
            |n, i, x| {
                let mut w = word(n, x).into_bytes();
                w.remove(i);
                String::from_utf8(w).unwrap()
            },
            |n, i, x| {
                let mut w = word(n, x).into_bytes();
                w.insert(i, w[i]);
                String::from_utf8(w).unwrap()
            },
            true,
        )
        .unwrap()
    }

    #[test]
    fn delta1_counts() {
        let d = delta1();
        assert_eq!(d.sizes(), [2, 3, 4, 5]);
        assert_eq!(d.vertices(3, d.find(3, "0011").unwrap()), vec![0, 0, 1, 1]);
        assert_eq!(d.spine(3, d.find(3, "0011").unwrap()), vec![d.find(1, "00").unwrap(), 1, 2]);
        assert_eq!(d.degeneracy_of(2, d.find(2, "001").unwrap()), Some((0, 1)));
        assert_eq!(d.degeneracy_of(1, 1), None);
        assert_eq!(d.vertex_components(), 1);
    }

    #[test]
    fn round_trip_through_file() {
        let d = delta1();
        assert_eq!(TruncSSet::validate(&d.to_file()).unwrap(), d);
    }

    #[test]
    fn broken_face_names_the_simplex() {
        let mut raw = delta1().to_file();
        // make d_2 of "001" disagree with the rest: d_0 d_2 ≠ d_1 d_0
        for e in raw.faces.iter_mut() {
            if e.level == 2 && e.from == "011" && e.index == 2 {
                e.to = "00".into();
            }
        }
        let err = TruncSSet::validate(&raw).unwrap_err();
        assert!(err.mentions("d_0 d_2 = d_1 d_0") || err.mentions("d_1 d_2 = d_1 d_1"));
        assert!(err.iter().any(|v| v.witnesses.iter().any(|w| w == "011@2")));
    }

    #[test]
    fn missing_and_dangling_entries() {
        let mut raw = delta1().to_file();
        raw.faces.pop();
        assert!(TruncSSet::validate(&raw).unwrap_err().mentions("partial table"));
        let mut raw = delta1().to_file();
        raw.degens[0].to = "nope".into();
        assert!(TruncSSet::validate(&raw).unwrap_err().mentions("dangling identifier"));
        let mut raw = delta1().to_file();
        raw.simplices.pop();
        assert!(TruncSSet::validate(&raw).unwrap_err().mentions("level mismatch"));
    }
}

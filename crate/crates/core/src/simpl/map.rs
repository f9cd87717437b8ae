use std::collections::BTreeMap;
use std::sync::Arc;

use super::{TruncSSet, TOP};
use crate::error::{Error, Result, ValidationErrors, Violation};
use crate::format::{FileRef, SMapFile, SSetFile};

/// A validated simplicial map between truncated simplicial sets.
///
/// All four levels are stored; when only levels 0 to 2 are supplied the
/// top level is induced from faces, which needs a coskeletal codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    dom: Arc<TruncSSet>,
    cod: Arc<TruncSSet>,
    levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    /// `levels` holds three or four level tables.
    pub fn validate(dom: Arc<TruncSSet>, cod: Arc<TruncSSet>, mut levels: Vec<Vec<usize>>) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        if levels.len() != TOP && levels.len() != TOP + 1 {
            errs.push(Violation::new("level mismatch", "a map needs tables for levels 0 to 2 or 0 to 3"));
            return Err(errs);
        }
        for (n, table) in levels.iter().enumerate() {
            if table.len() != dom.size(n) {
                errs.push(Violation::new("level mismatch", format!("level {n} table has the wrong length")));
            } else if table.iter().any(|&y| y >= cod.size(n)) {
                errs.push(Violation::new("dangling identifier", format!("level {n} image outside the codomain")));
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        if levels.len() == TOP {
            if !cod.is_coskeletal() {
                errs.push(Violation::new(
                    "level mismatch",
                    "level 3 is missing and the codomain is not coskeletal",
                ));
                return Err(errs);
            }
            let mut top = Vec::with_capacity(dom.size(TOP));
            for x in 0..dom.size(TOP) {
                let img: Vec<usize> = (0..=TOP).map(|i| levels[TOP - 1][dom.face(TOP, i, x)]).collect();
                match cod.with_boundary(TOP, &img) {
                    [y, ..] => top.push(*y),
                    [] => {
                        errs.push(
                            Violation::new("unbounded boundary", "image of a 3-simplex boundary bounds no 3-simplex")
                                .with([dom.name(TOP, x).to_string()]),
                        );
                        top.push(0);
                    }
                }
            }
            if !errs.is_empty() {
                return Err(errs);
            }
            levels.push(top);
        }
        for n in 1..=TOP {
            for x in 0..dom.size(n) {
                for i in 0..=n {
                    if levels[n - 1][dom.face(n, i, x)] != cod.face(n, i, levels[n][x]) {
                        errs.push(
                            Violation::new(format!("d_{i} naturality"), format!("map does not commute with d_{i} at level {n}"))
                                .with([dom.name(n, x).to_string()]),
                        );
                    }
                }
            }
        }
        for n in 0..TOP {
            for x in 0..dom.size(n) {
                for i in 0..=n {
                    if levels[n + 1][dom.degen(n, i, x)] != cod.degen(n, i, levels[n][x]) {
                        errs.push(
                            Violation::new(format!("s_{i} naturality"), format!("map does not commute with s_{i} at level {n}"))
                                .with([dom.name(n, x).to_string()]),
                        );
                    }
                }
            }
        }
        errs.into_result(|| Self { dom, cod, levels })
    }

    pub fn identity(x: Arc<TruncSSet>) -> Self {
        let levels = (0..=TOP).map(|n| (0..x.size(n)).collect()).collect();
        Self {
            dom: x.clone(),
            cod: x,
            levels,
        }
    }

    /// The map sending every simplex to the degenerate simplex on `vertex`.
    pub fn constant(dom: Arc<TruncSSet>, cod: Arc<TruncSSet>, vertex: usize) -> Self {
        let levels = (0..=TOP).map(|n| vec![cod.degenerate_vertex(n, vertex); dom.size(n)]).collect();
        Self { dom, cod, levels }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&self.cod, &other.dom) && self.cod != other.dom {
            return Err(Error::Mismatch("codomain of the first map is not the domain of the second".into()));
        }
        let levels = (0..=TOP)
            .map(|n| self.levels[n].iter().map(|&y| other.levels[n][y]).collect())
            .collect();
        Ok(Self {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            levels,
        })
    }

    pub fn dom(&self) -> &Arc<TruncSSet> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<TruncSSet> {
        &self.cod
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    /// Level tables 0 to 2, which determine the map into a coskeletal set.
    pub fn key(&self) -> Vec<usize> {
        self.levels[..TOP].concat()
    }

    pub fn is_bijective(&self) -> bool {
        (0..=TOP).all(|n| {
            let mut seen = vec![false; self.cod.size(n)];
            self.dom.size(n) == self.cod.size(n) && self.levels[n].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    /// With `full_top`, level 3 is written out even when it is induced.
    pub fn to_file(&self, dom: FileRef<SSetFile>, cod: FileRef<SSetFile>, full_top: bool) -> SMapFile {
        let table = |n: usize| -> BTreeMap<String, String> {
            (0..self.dom.size(n))
                .map(|x| (self.dom.name(n, x).to_string(), self.cod.name(n, self.levels[n][x]).to_string()))
                .collect()
        };
        SMapFile {
            dom,
            cod,
            phi0: table(0),
            phi1: table(1),
            phi2: table(2),
            phi3: (full_top || !self.cod.is_coskeletal()).then(|| table(3)),
        }
    }

    pub fn from_file(file: &SMapFile, dom: Arc<TruncSSet>, cod: Arc<TruncSSet>) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let mut tables = vec![&file.phi0, &file.phi1, &file.phi2];
        if let Some(t) = &file.phi3 {
            tables.push(t);
        }
        let mut levels = Vec::new();
        for (n, table) in tables.into_iter().enumerate() {
            let mut level = Vec::with_capacity(dom.size(n));
            for x in 0..dom.size(n) {
                let name = dom.name(n, x);
                match table.get(name).map(|v| (v, cod.find(n, v))) {
                    Some((_, Some(y))) => level.push(y),
                    Some((v, None)) => {
                        errs.push(
                            Violation::new("dangling identifier", format!("level {n} image `{v}` is unknown"))
                                .with([name.to_string()]),
                        );
                        level.push(0);
                    }
                    None => {
                        errs.push(
                            Violation::new("partial table", format!("level {n} has no image")).with([name.to_string()]),
                        );
                        level.push(0);
                    }
                }
            }
            for k in table.keys() {
                if dom.find(n, k).is_none() {
                    errs.push(
                        Violation::new("dangling identifier", format!("level {n} key `{k}` is unknown")).with([k.clone()]),
                    );
                }
            }
            levels.push(level);
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        Self::validate(dom, cod, levels)
    }
}

/// The map sending simplices to the codomain simplices with the image spine,
/// given its vertex and edge parts; `None` unless that is well defined and
/// simplicial.
pub fn spine_map(dom: Arc<TruncSSet>, cod: Arc<TruncSSet>, phi0: Vec<usize>, phi1: Vec<usize>) -> Option<SimplicialMap> {
    let mut by_spine = vec![std::collections::HashMap::new(); TOP + 1];
    for n in 2..=TOP {
        for y in 0..cod.size(n) {
            if by_spine[n].insert(cod.spine(n, y), y).is_some() {
                return None;
            }
        }
    }
    let mut levels = vec![phi0, phi1];
    for n in 2..=TOP {
        let mut level = Vec::with_capacity(dom.size(n));
        for x in 0..dom.size(n) {
            let img: Vec<usize> = dom.spine(n, x).iter().map(|&e| levels[1][e]).collect();
            level.push(*by_spine[n].get(&img)?);
        }
        levels.push(level);
    }
    SimplicialMap::validate(dom, cod, levels).ok()
}

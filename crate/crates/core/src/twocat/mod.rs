//! Finite strict 2-categories stored as explicit tables.
//!
//! All cells are addressed by dense indices ([`Obj`], [`Arrow`], [`Cell`]),
//! assigned in lexicographic order of their identifiers. Composition
//! conventions:
//!
//! * [`TwoCat::comp1`]`(f, g)` is `g ∘ f` (f first);
//! * [`TwoCat::vcomp`]`(a, b)` is `b · a` (a first);
//! * [`TwoCat::hcomp`]`(a, b)` is `b ∗ a` where `a` lies over `A → B` and `b`
//!   over `B → C`.

mod category;

use std::collections::HashMap;
use std::fmt;

pub use category::Category;

use crate::error::{ValidationErrors, Violation};
use crate::format::{CellRecord, Comp1Entry, Comp2Entry, TwoCatFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(pub usize);

/// Name of the arrow `i → j` in the ordinal categories.
pub fn order_arrow_name(i: &str, j: &str) -> String {
    format!("{i}-{j}")
}

/// Name of the identity 2-cell on a 1-cell in the 2-discrete constructors.
pub fn identity_cell_name(arrow: &str) -> String {
    format!("1({arrow})")
}

#[derive(Clone, PartialEq, Eq)]
pub struct TwoCat {
    objects: Vec<String>,
    arrows: Vec<String>,
    arrow_src: Vec<Obj>,
    arrow_tgt: Vec<Obj>,
    id1: Vec<Arrow>,
    comp1: Vec<Option<Arrow>>,
    cells: Vec<String>,
    cell_src: Vec<Arrow>,
    cell_tgt: Vec<Arrow>,
    id2: Vec<Cell>,
    vcomp: Vec<Option<Cell>>,
    hcomp: Vec<Option<Cell>>,
    hom1: HashMap<(Obj, Obj), Vec<Arrow>>,
    hom2: HashMap<(Arrow, Arrow), Vec<Cell>>,
}

impl fmt::Debug for TwoCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwoCat")
            .field("objects", &self.objects.len())
            .field("one_cells", &self.arrows.len())
            .field("two_cells", &self.cells.len())
            .finish()
    }
}

impl TwoCat {
    /// Checks a presentation against the strict 2-category axioms and returns
    /// either the validated structure or every violation found.
    ///
    /// Reference and totality problems are reported first; the algebraic laws
    /// are only checked once all tables are total.
    pub fn validate(raw: &TwoCatFile) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let cat = Self::build_tables(raw, &mut errs);
        let Some(cat) = cat.filter(|_| errs.is_empty()) else {
            return Err(errs);
        };
        cat.check_laws(&mut errs);
        errs.into_result(|| cat)
    }

    fn build_tables(raw: &TwoCatFile, errs: &mut ValidationErrors) -> Option<Self> {
        let mut objects = raw.objects.clone();
        objects.sort();
        for w in objects.windows(2) {
            if w[0] == w[1] {
                errs.push(Violation::new("duplicate identifier", "object listed twice").with([w[0].clone()]));
            }
        }
        objects.dedup();
        let obj_ix = names_index(&objects);

        let (arrows, arrow_src, arrow_tgt) = cell_table(&raw.one_cells, &obj_ix, "one_cell", errs);
        let arrow_ix = names_index(&arrows);
        let n1 = arrows.len();

        let mut id1 = vec![None; objects.len()];
        for (o, a) in &raw.id1 {
            let (Some(oi), Some(ai)) = (
                resolve(&obj_ix, o, "id1 object", errs),
                resolve(&arrow_ix, a, "id1 one_cell", errs),
            ) else {
                continue;
            };
            if arrow_src[ai] != Obj(oi) || arrow_tgt[ai] != Obj(oi) {
                errs.push(
                    Violation::new("identity endpoints", "id1 is not an endo-1-cell on its object")
                        .with([o.clone(), a.clone()]),
                );
            }
            id1[oi] = Some(Arrow(ai));
        }
        for (oi, v) in id1.iter().enumerate() {
            if v.is_none() {
                errs.push(Violation::new("partial table", "id1 missing for object").with([objects[oi].clone()]));
            }
        }

        let mut comp1 = vec![None; n1 * n1];
        for Comp1Entry { f, g, result } in &raw.comp1 {
            let (Some(fi), Some(gi), Some(ri)) = (
                resolve(&arrow_ix, f, "comp1 entry", errs),
                resolve(&arrow_ix, g, "comp1 entry", errs),
                resolve(&arrow_ix, result, "comp1 entry", errs),
            ) else {
                continue;
            };
            if arrow_tgt[fi] != arrow_src[gi] {
                errs.push(
                    Violation::new("comp1 on non-composable pair", "tgt(f) differs from src(g)")
                        .with([f.clone(), g.clone()]),
                );
                continue;
            }
            if arrow_src[ri] != arrow_src[fi] || arrow_tgt[ri] != arrow_tgt[gi] {
                errs.push(
                    Violation::new("comp1 endpoints", "result does not run from src(f) to tgt(g)")
                        .with([f.clone(), g.clone(), result.clone()]),
                );
            }
            set_once(&mut comp1[fi * n1 + gi], Arrow(ri), "comp1", [f, g], errs);
        }
        for f in 0..n1 {
            for g in 0..n1 {
                if arrow_tgt[f] == arrow_src[g] && comp1[f * n1 + g].is_none() {
                    errs.push(
                        Violation::new("partial table", "comp1 has no entry for composable pair")
                            .with([arrows[f].clone(), arrows[g].clone()]),
                    );
                }
            }
        }

        let (cells, src_names, tgt_names) = {
            let mut recs: Vec<&CellRecord> = raw.two_cells.iter().collect();
            recs.sort_by(|a, b| a.id.cmp(&b.id));
            let mut ids = Vec::new();
            let mut s = Vec::new();
            let mut t = Vec::new();
            for (i, r) in recs.iter().enumerate() {
                if i > 0 && recs[i - 1].id == r.id {
                    errs.push(Violation::new("duplicate identifier", "two_cell listed twice").with([r.id.clone()]));
                    continue;
                }
                ids.push(r.id.clone());
                s.push(r.src.clone());
                t.push(r.tgt.clone());
            }
            (ids, s, t)
        };
        let mut cell_src = Vec::with_capacity(cells.len());
        let mut cell_tgt = Vec::with_capacity(cells.len());
        for i in 0..cells.len() {
            let s = resolve(&arrow_ix, &src_names[i], "two_cell source", errs);
            let t = resolve(&arrow_ix, &tgt_names[i], "two_cell target", errs);
            if let (Some(s), Some(t)) = (s, t) {
                if arrow_src[s] != arrow_src[t] || arrow_tgt[s] != arrow_tgt[t] {
                    errs.push(
                        Violation::new("non-parallel 2-cell", "source and target 1-cells have different endpoints")
                            .with([cells[i].clone()]),
                    );
                }
            }
            cell_src.push(Arrow(s.unwrap_or(0)));
            cell_tgt.push(Arrow(t.unwrap_or(0)));
        }
        let cell_ix = names_index(&cells);
        let n2 = cells.len();

        let mut id2 = vec![None; n1];
        for (a, c) in &raw.id2 {
            let (Some(ai), Some(ci)) = (
                resolve(&arrow_ix, a, "id2 one_cell", errs),
                resolve(&cell_ix, c, "id2 two_cell", errs),
            ) else {
                continue;
            };
            if cell_src[ci] != Arrow(ai) || cell_tgt[ci] != Arrow(ai) {
                errs.push(
                    Violation::new("identity endpoints", "id2 does not run from the 1-cell to itself")
                        .with([a.clone(), c.clone()]),
                );
            }
            id2[ai] = Some(Cell(ci));
        }
        for (ai, v) in id2.iter().enumerate() {
            if v.is_none() {
                errs.push(Violation::new("partial table", "id2 missing for one_cell").with([arrows[ai].clone()]));
            }
        }

        let mut vcomp = vec![None; n2 * n2];
        for Comp2Entry { alpha, beta, result } in &raw.vcomp {
            let (Some(a), Some(b), Some(r)) = (
                resolve(&cell_ix, alpha, "vcomp entry", errs),
                resolve(&cell_ix, beta, "vcomp entry", errs),
                resolve(&cell_ix, result, "vcomp entry", errs),
            ) else {
                continue;
            };
            if cell_tgt[a] != cell_src[b] {
                errs.push(
                    Violation::new("vcomp on non-composable pair", "tgt(alpha) differs from src(beta)")
                        .with([alpha.clone(), beta.clone()]),
                );
                continue;
            }
            if cell_src[r] != cell_src[a] || cell_tgt[r] != cell_tgt[b] {
                errs.push(
                    Violation::new("vcomp boundary", "result does not run from src(alpha) to tgt(beta)")
                        .with([alpha.clone(), beta.clone(), result.clone()]),
                );
            }
            set_once(&mut vcomp[a * n2 + b], Cell(r), "vcomp", [alpha, beta], errs);
        }
        for a in 0..n2 {
            for b in 0..n2 {
                if cell_tgt[a] == cell_src[b] && vcomp[a * n2 + b].is_none() {
                    errs.push(
                        Violation::new("partial table", "vcomp has no entry for composable pair")
                            .with([cells[a].clone(), cells[b].clone()]),
                    );
                }
            }
        }

        let mut hcomp = vec![None; n2 * n2];
        for Comp2Entry { alpha, beta, result } in &raw.hcomp {
            let (Some(a), Some(b), Some(r)) = (
                resolve(&cell_ix, alpha, "hcomp entry", errs),
                resolve(&cell_ix, beta, "hcomp entry", errs),
                resolve(&cell_ix, result, "hcomp entry", errs),
            ) else {
                continue;
            };
            if arrow_tgt[cell_src[a].0] != arrow_src[cell_src[b].0] {
                errs.push(
                    Violation::new("hcomp on non-composable pair", "alpha and beta do not meet at an object")
                        .with([alpha.clone(), beta.clone()]),
                );
                continue;
            }
            set_once(&mut hcomp[a * n2 + b], Cell(r), "hcomp", [alpha, beta], errs);
        }
        for a in 0..n2 {
            for b in 0..n2 {
                if arrow_tgt[cell_src[a].0] == arrow_src[cell_src[b].0] && hcomp[a * n2 + b].is_none() {
                    errs.push(
                        Violation::new("partial table", "hcomp has no entry for composable pair")
                            .with([cells[a].clone(), cells[b].clone()]),
                    );
                }
            }
        }

        if !errs.is_empty() {
            return None;
        }
        let id1 = id1.into_iter().map(Option::unwrap).collect();
        let id2 = id2.into_iter().map(Option::unwrap).collect();
        Some(Self::assemble(
            objects, arrows, arrow_src, arrow_tgt, id1, comp1, cells, cell_src, cell_tgt, id2, vcomp, hcomp,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        objects: Vec<String>,
        arrows: Vec<String>,
        arrow_src: Vec<Obj>,
        arrow_tgt: Vec<Obj>,
        id1: Vec<Arrow>,
        comp1: Vec<Option<Arrow>>,
        cells: Vec<String>,
        cell_src: Vec<Arrow>,
        cell_tgt: Vec<Arrow>,
        id2: Vec<Cell>,
        vcomp: Vec<Option<Cell>>,
        hcomp: Vec<Option<Cell>>,
    ) -> Self {
        let mut hom1: HashMap<(Obj, Obj), Vec<Arrow>> = HashMap::new();
        for a in 0..arrows.len() {
            hom1.entry((arrow_src[a], arrow_tgt[a])).or_default().push(Arrow(a));
        }
        let mut hom2: HashMap<(Arrow, Arrow), Vec<Cell>> = HashMap::new();
        for c in 0..cells.len() {
            hom2.entry((cell_src[c], cell_tgt[c])).or_default().push(Cell(c));
        }
        Self {
            objects,
            arrows,
            arrow_src,
            arrow_tgt,
            id1,
            comp1,
            cells,
            cell_src,
            cell_tgt,
            id2,
            vcomp,
            hcomp,
            hom1,
            hom2,
        }
    }

    fn check_laws(&self, errs: &mut ValidationErrors) {
        let an = |a: Arrow| self.arrows[a.0].clone();
        let cn = |c: Cell| self.cells[c.0].clone();

        for f in self.arrows() {
            let (a, b) = (self.src1(f), self.tgt1(f));
            if self.comp1(self.id1(a), f) != Some(f) || self.comp1(f, self.id1(b)) != Some(f) {
                errs.push(Violation::new("comp1 unit law", "id1 does not act trivially").with([an(f)]));
            }
            for g in self.arrows_from(b) {
                let gf = self.comp1(f, g).unwrap();
                for h in self.arrows_from(self.tgt1(g)) {
                    if self.comp1(gf, h) != self.comp1(f, self.comp1(g, h).unwrap()) {
                        errs.push(
                            Violation::new("comp1 associativity", "(h∘g)∘f differs from h∘(g∘f)")
                                .with([an(f), an(g), an(h)]),
                        );
                    }
                }
            }
        }

        for a in self.cells() {
            let (s, t) = (self.cell_src(a), self.cell_tgt(a));
            if self.vcomp(self.id2(s), a) != Some(a) || self.vcomp(a, self.id2(t)) != Some(a) {
                errs.push(Violation::new("vcomp unit law", "id2 does not act trivially").with([cn(a)]));
            }
            for b in self.cells_from(t) {
                let ba = self.vcomp(a, b).unwrap();
                for c in self.cells_from(self.cell_tgt(b)) {
                    if self.vcomp(ba, c) != self.vcomp(a, self.vcomp(b, c).unwrap()) {
                        errs.push(
                            Violation::new("vcomp associativity", "(c·b)·a differs from c·(b·a)")
                                .with([cn(a), cn(b), cn(c)]),
                        );
                    }
                }
            }
        }

        // hcomp boundary, units, associativity
        for a in self.cells() {
            let mid = self.tgt1(self.cell_src(a));
            let start = self.src1(self.cell_src(a));
            for b in self.cells_over_from(mid) {
                let r = self.hcomp(a, b).unwrap();
                let want_s = self.comp1(self.cell_src(a), self.cell_src(b)).unwrap();
                let want_t = self.comp1(self.cell_tgt(a), self.cell_tgt(b)).unwrap();
                if self.cell_src(r) != want_s || self.cell_tgt(r) != want_t {
                    errs.push(
                        Violation::new("hcomp boundary", "result does not run between the composite 1-cells")
                            .with([cn(a), cn(b), cn(r)]),
                    );
                    continue;
                }
            }
            let left_unit = self.hcomp(self.id2(self.id1(start)), a);
            let right_unit = self.hcomp(a, self.id2(self.id1(mid)));
            if left_unit != Some(a) || right_unit != Some(a) {
                errs.push(
                    Violation::new("hcomp unit law", "whiskering by an identity 1-cell is not trivial").with([cn(a)]),
                );
            }
        }
        if !errs.is_empty() {
            return;
        }
        for a in self.cells() {
            for b in self.cells_over_from(self.tgt1(self.cell_src(a))) {
                let ba = self.hcomp(a, b).unwrap();
                for c in self.cells_over_from(self.tgt1(self.cell_src(b))) {
                    if self.hcomp(ba, c) != self.hcomp(a, self.hcomp(b, c).unwrap()) {
                        errs.push(
                            Violation::new("hcomp associativity", "(c∗b)∗a differs from c∗(b∗a)")
                                .with([cn(a), cn(b), cn(c)]),
                        );
                    }
                }
            }
        }

        // functoriality of hcomp: identities and interchange
        for f in self.arrows() {
            for g in self.arrows_from(self.tgt1(f)) {
                let gf = self.comp1(f, g).unwrap();
                if self.hcomp(self.id2(f), self.id2(g)) != Some(self.id2(gf)) {
                    errs.push(
                        Violation::new("hcomp preserves identities", "id2(g) ∗ id2(f) differs from id2(g∘f)")
                            .with([an(f), an(g)]),
                    );
                }
            }
        }
        for a in self.cells() {
            for a2 in self.cells_from(self.cell_tgt(a)) {
                let a2a = self.vcomp(a, a2).unwrap();
                for b in self.cells_over_from(self.tgt1(self.cell_src(a))) {
                    for b2 in self.cells_from(self.cell_tgt(b)) {
                        let lhs = self.hcomp(a2a, self.vcomp(b, b2).unwrap());
                        let rhs = self.vcomp(self.hcomp(a, b).unwrap(), self.hcomp(a2, b2).unwrap());
                        if lhs != rhs {
                            errs.push(
                                Violation::new(
                                    "interchange law",
                                    "(b2·b)∗(a2·a) differs from (b2∗a2)·(b∗a)",
                                )
                                .with([cn(a), cn(a2), cn(b), cn(b2)]),
                            );
                        }
                    }
                }
            }
        }
    }

    /// Serializes back into the interchange presentation, in canonical order.
    pub fn to_file(&self) -> TwoCatFile {
        let mut raw = TwoCatFile {
            objects: self.objects.clone(),
            ..Default::default()
        };
        for f in self.arrows() {
            raw.one_cells.push(CellRecord::new(
                self.arrow_name(f),
                self.obj_name(self.src1(f)),
                self.obj_name(self.tgt1(f)),
            ));
        }
        for o in self.objects() {
            raw.id1.insert(self.obj_name(o).into(), self.arrow_name(self.id1(o)).into());
        }
        for f in self.arrows() {
            for g in self.arrows_from(self.tgt1(f)) {
                raw.comp1.push(Comp1Entry {
                    f: self.arrow_name(f).into(),
                    g: self.arrow_name(g).into(),
                    result: self.arrow_name(self.comp1(f, g).unwrap()).into(),
                });
            }
        }
        for c in self.cells() {
            raw.two_cells.push(CellRecord::new(
                self.cell_name(c),
                self.arrow_name(self.cell_src(c)),
                self.arrow_name(self.cell_tgt(c)),
            ));
        }
        for f in self.arrows() {
            raw.id2.insert(self.arrow_name(f).into(), self.cell_name(self.id2(f)).into());
        }
        for a in self.cells() {
            for b in self.cells_from(self.cell_tgt(a)) {
                raw.vcomp.push(Comp2Entry {
                    alpha: self.cell_name(a).into(),
                    beta: self.cell_name(b).into(),
                    result: self.cell_name(self.vcomp(a, b).unwrap()).into(),
                });
            }
            for b in self.cells_over_from(self.tgt1(self.cell_src(a))) {
                raw.hcomp.push(Comp2Entry {
                    alpha: self.cell_name(a).into(),
                    beta: self.cell_name(b).into(),
                    result: self.cell_name(self.hcomp(a, b).unwrap()).into(),
                });
            }
        }
        raw
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + Clone {
        (0..self.arrows.len()).map(Arrow)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + Clone {
        (0..self.cells.len()).map(Cell)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn obj_name(&self, o: Obj) -> &str {
        &self.objects[o.0]
    }

    pub fn arrow_name(&self, f: Arrow) -> &str {
        &self.arrows[f.0]
    }

    pub fn cell_name(&self, c: Cell) -> &str {
        &self.cells[c.0]
    }

    pub fn find_obj(&self, name: &str) -> Option<Obj> {
        self.objects.binary_search_by(|s| s.as_str().cmp(name)).ok().map(Obj)
    }

    pub fn find_arrow(&self, name: &str) -> Option<Arrow> {
        self.arrows.binary_search_by(|s| s.as_str().cmp(name)).ok().map(Arrow)
    }

    pub fn find_cell(&self, name: &str) -> Option<Cell> {
        self.cells.binary_search_by(|s| s.as_str().cmp(name)).ok().map(Cell)
    }

    pub fn src1(&self, f: Arrow) -> Obj {
        self.arrow_src[f.0]
    }

    pub fn tgt1(&self, f: Arrow) -> Obj {
        self.arrow_tgt[f.0]
    }

    pub fn id1(&self, o: Obj) -> Arrow {
        self.id1[o.0]
    }

    pub fn is_id1(&self, f: Arrow) -> bool {
        self.id1[self.src1(f).0] == f
    }

    /// `g ∘ f`; `None` unless `tgt(f) = src(g)`.
    pub fn comp1(&self, f: Arrow, g: Arrow) -> Option<Arrow> {
        self.comp1[f.0 * self.arrows.len() + g.0]
    }

    pub fn cell_src(&self, c: Cell) -> Arrow {
        self.cell_src[c.0]
    }

    pub fn cell_tgt(&self, c: Cell) -> Arrow {
        self.cell_tgt[c.0]
    }

    pub fn id2(&self, f: Arrow) -> Cell {
        self.id2[f.0]
    }

    pub fn is_id2(&self, c: Cell) -> bool {
        self.id2[self.cell_src(c).0] == c
    }

    /// `b · a`; `None` unless `tgt(a) = src(b)`.
    pub fn vcomp(&self, a: Cell, b: Cell) -> Option<Cell> {
        self.vcomp[a.0 * self.cells.len() + b.0]
    }

    /// `b ∗ a` for `a` over `A → B` and `b` over `B → C`.
    pub fn hcomp(&self, a: Cell, b: Cell) -> Option<Cell> {
        self.hcomp[a.0 * self.cells.len() + b.0]
    }

    /// Whiskering `g ∗ a`: post-compose the 2-cell `a` with the 1-cell `g`.
    pub fn whisker_post(&self, a: Cell, g: Arrow) -> Option<Cell> {
        self.hcomp(a, self.id2(g))
    }

    /// Whiskering `b ∗ f`: pre-compose the 2-cell `b` with the 1-cell `f`.
    pub fn whisker_pre(&self, f: Arrow, b: Cell) -> Option<Cell> {
        self.hcomp(self.id2(f), b)
    }

    /// Vertical composite of a nonempty chain, first cell first.
    pub fn vcomp_chain(&self, chain: &[Cell]) -> Option<Cell> {
        let (first, rest) = chain.split_first()?;
        rest.iter().try_fold(*first, |acc, &c| self.vcomp(acc, c))
    }

    pub fn arrows_between(&self, a: Obj, b: Obj) -> &[Arrow] {
        self.hom1.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cells_between(&self, f: Arrow, g: Arrow) -> &[Cell] {
        self.hom2.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn arrows_from(&self, o: Obj) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&f| self.src1(f) == o)
    }

    /// 2-cells whose source is `f`.
    pub fn cells_from(&self, f: Arrow) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(move |&c| self.cell_src(c) == f)
    }

    /// 2-cells lying over 1-cells that start at `o`.
    pub fn cells_over_from(&self, o: Obj) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(move |&c| self.src1(self.cell_src(c)) == o)
    }

    /// A strict inverse of `f` under `comp1`, if any.
    pub fn inverse1(&self, f: Arrow) -> Option<Arrow> {
        let (a, b) = (self.src1(f), self.tgt1(f));
        self.arrows_between(b, a)
            .iter()
            .copied()
            .find(|&g| self.comp1(f, g) == Some(self.id1(a)) && self.comp1(g, f) == Some(self.id1(b)))
    }

    /// A vertical inverse of `c`, if any.
    pub fn inverse2(&self, c: Cell) -> Option<Cell> {
        let (f, g) = (self.cell_src(c), self.cell_tgt(c));
        self.cells_between(g, f)
            .iter()
            .copied()
            .find(|&d| self.vcomp(c, d) == Some(self.id2(f)) && self.vcomp(d, c) == Some(self.id2(g)))
    }

    /// True iff every 1-cell has a strict inverse and every 2-cell a
    /// vertical inverse.
    pub fn is_two_groupoid(&self) -> bool {
        self.arrows().all(|f| self.inverse1(f).is_some()) && self.cells().all(|c| self.inverse2(c).is_some())
    }

    /// True iff every 2-cell is an identity.
    pub fn is_two_discrete(&self) -> bool {
        self.cells().all(|c| self.is_id2(c))
    }

    /// The 1-cell with the given endpoints when it is unique.
    pub fn unique_arrow(&self, a: Obj, b: Obj) -> Option<Arrow> {
        match self.arrows_between(a, b) {
            [f] => Some(*f),
            _ => None,
        }
    }

    /// Recovers the underlying category of a 2-discrete 2-category.
    pub fn underlying_category(&self) -> Option<Category> {
        if !self.is_two_discrete() {
            return None;
        }
        let raw = crate::format::CategoryFile {
            objects: self.objects.clone(),
            arrows: self
                .arrows()
                .map(|f| CellRecord::new(self.arrow_name(f), self.obj_name(self.src1(f)), self.obj_name(self.tgt1(f))))
                .collect(),
            identities: self
                .objects()
                .map(|o| (self.obj_name(o).to_string(), self.arrow_name(self.id1(o)).to_string()))
                .collect(),
            comp: self
                .arrows()
                .flat_map(|f| {
                    self.arrows_from(self.tgt1(f)).map(move |g| Comp1Entry {
                        f: self.arrow_name(f).into(),
                        g: self.arrow_name(g).into(),
                        result: self.arrow_name(self.comp1(f, g).unwrap()).into(),
                    })
                })
                .collect(),
        };
        Category::validate(&raw).ok()
    }
}

/// The terminal 2-category: one object, one 1-cell, one 2-cell.
pub fn terminal() -> TwoCat {
    delta_two_category(0)
}

/// The ordinal `[n] = {0 ≤ 1 ≤ … ≤ n}` as a 2-category with only identity
/// 2-cells.
pub fn delta_two_category(n: usize) -> TwoCat {
    let name = |i: usize| i.to_string();
    let arrow = |i: usize, j: usize| order_arrow_name(&name(i), &name(j));
    let mut raw = TwoCatFile {
        objects: (0..=n).map(name).collect(),
        ..Default::default()
    };
    for i in 0..=n {
        raw.id1.insert(name(i), arrow(i, i));
        for j in i..=n {
            raw.one_cells.push(CellRecord::new(arrow(i, j), name(i), name(j)));
            raw.two_cells
                .push(CellRecord::new(identity_cell_name(&arrow(i, j)), arrow(i, j), arrow(i, j)));
            raw.id2.insert(arrow(i, j), identity_cell_name(&arrow(i, j)));
            raw.vcomp.push(Comp2Entry {
                alpha: identity_cell_name(&arrow(i, j)),
                beta: identity_cell_name(&arrow(i, j)),
                result: identity_cell_name(&arrow(i, j)),
            });
            for k in j..=n {
                raw.comp1.push(Comp1Entry {
                    f: arrow(i, j),
                    g: arrow(j, k),
                    result: arrow(i, k),
                });
                raw.hcomp.push(Comp2Entry {
                    alpha: identity_cell_name(&arrow(i, j)),
                    beta: identity_cell_name(&arrow(j, k)),
                    result: identity_cell_name(&arrow(i, k)),
                });
            }
        }
    }
    TwoCat::validate(&raw).expect("ordinal 2-category is valid")
}

/// A category regarded as a 2-discrete 2-category: the only 2-cells are the
/// identities `1(f)`.
pub fn from_category(cat: &Category) -> TwoCat {
    let mut raw = TwoCatFile {
        objects: cat.objects().to_vec(),
        ..Default::default()
    };
    let arrows = cat.arrows();
    for (a, name) in arrows.iter().enumerate() {
        let (s, t) = (&cat.objects()[cat.src(a)], &cat.objects()[cat.tgt(a)]);
        raw.one_cells.push(CellRecord::new(name.clone(), s.clone(), t.clone()));
        raw.two_cells
            .push(CellRecord::new(identity_cell_name(name), name.clone(), name.clone()));
        raw.id2.insert(name.clone(), identity_cell_name(name));
        raw.vcomp.push(Comp2Entry {
            alpha: identity_cell_name(name),
            beta: identity_cell_name(name),
            result: identity_cell_name(name),
        });
    }
    for (o, name) in cat.objects().iter().enumerate() {
        raw.id1.insert(name.clone(), arrows[cat.identity(o)].clone());
    }
    for f in 0..arrows.len() {
        for g in cat.arrows_from(cat.tgt(f)) {
            let r = cat.compose(f, g).expect("validated category is total");
            raw.comp1.push(Comp1Entry {
                f: arrows[f].clone(),
                g: arrows[g].clone(),
                result: arrows[r].clone(),
            });
            raw.hcomp.push(Comp2Entry {
                alpha: identity_cell_name(&arrows[f]),
                beta: identity_cell_name(&arrows[g]),
                result: identity_cell_name(&arrows[r]),
            });
        }
    }
    TwoCat::validate(&raw).expect("a validated category is a valid 2-discrete 2-category")
}

fn names_index(names: &[String]) -> HashMap<String, usize> {
    names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()
}

fn resolve(ix: &HashMap<String, usize>, key: &str, context: &str, errs: &mut ValidationErrors) -> Option<usize> {
    let found = ix.get(key).copied();
    if found.is_none() {
        errs.push(
            Violation::new("dangling identifier", format!("{context} refers to unknown `{key}`")).with([key.to_string()]),
        );
    }
    found
}

fn cell_table(
    recs: &[CellRecord],
    endpoint_ix: &HashMap<String, usize>,
    what: &str,
    errs: &mut ValidationErrors,
) -> (Vec<String>, Vec<Obj>, Vec<Obj>) {
    let mut sorted: Vec<&CellRecord> = recs.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let mut ids = Vec::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for (i, r) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1].id == r.id {
            errs.push(Violation::new("duplicate identifier", format!("{what} listed twice")).with([r.id.clone()]));
            continue;
        }
        let s = resolve(endpoint_ix, &r.src, &format!("{what} `{}` source", r.id), errs);
        let t = resolve(endpoint_ix, &r.tgt, &format!("{what} `{}` target", r.id), errs);
        ids.push(r.id.clone());
        src.push(Obj(s.unwrap_or(0)));
        tgt.push(Obj(t.unwrap_or(0)));
    }
    (ids, src, tgt)
}

fn set_once<T: PartialEq + Copy>(
    slot: &mut Option<T>,
    value: T,
    table: &str,
    key: [&String; 2],
    errs: &mut ValidationErrors,
) {
    match *slot {
        Some(prev) if prev != value => errs.push(
            Violation::new("conflicting table entry", format!("{table} lists the pair twice with different results"))
                .with(key.map(|s| s.clone())),
        ),
        _ => *slot = Some(value),
    }
}

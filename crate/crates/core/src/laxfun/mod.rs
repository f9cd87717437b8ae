//! Normal lax 2-functors and lax natural transformations between finite
//! 2-categories.
//!
//! Conventions, fixed throughout the crate:
//!
//! * the structure 2-cell of a lax functor runs `σ(f, g) : F(g∘f) ⇒ F(g)∘F(f)`;
//! * a transformation `α : F ⇒ G` has components `α_A : F(A) → G(A)` and
//!   structure 2-cells `s_f : α_B∘F(f) ⇒ G(f)∘α_A` for `f : A → B`.

mod enumerate;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use enumerate::{
    enumerate_lax_functors, enumerate_lax_transformations, find_lax_transformation, pi0_lax, ComponentPolicy,
    LaxClasses,
};

use crate::error::{Error, Result, ValidationErrors, Violation};
use crate::format::{FileRef, LaxFunctorFile, SigmaEntry, TwoCatFile};
use crate::twocat::{Arrow, Cell, Obj, TwoCat};

/// Index-level data of a candidate lax functor, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaxFunctorData {
    pub on_objects: Vec<Obj>,
    pub on_arrows: Vec<Arrow>,
    pub on_cells: Vec<Cell>,
    /// Structure cells keyed by composable `(f, g)`. Pairs involving an
    /// identity may be omitted; normality fills them in.
    pub sigma: BTreeMap<(Arrow, Arrow), Cell>,
}

/// A validated normal lax 2-functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxFunctor {
    dom: Arc<TwoCat>,
    cod: Arc<TwoCat>,
    on_objects: Vec<Obj>,
    on_arrows: Vec<Arrow>,
    on_cells: Vec<Cell>,
    // indexed f * |arrows(dom)| + g, `Some` exactly on composable pairs
    sigma: Vec<Option<Cell>>,
}

impl LaxFunctor {
    pub fn validate(dom: Arc<TwoCat>, cod: Arc<TwoCat>, data: LaxFunctorData) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let (c, d) = (&*dom, &*cod);
        if data.on_objects.len() != c.num_objects()
            || data.on_arrows.len() != c.num_arrows()
            || data.on_cells.len() != c.num_cells()
        {
            errs.push(Violation::new("level mismatch", "object, 1-cell or 2-cell table has the wrong length"));
            return Err(errs);
        }
        if data.on_objects.iter().any(|o| o.0 >= d.num_objects())
            || data.on_arrows.iter().any(|f| f.0 >= d.num_arrows())
            || data.on_cells.iter().any(|a| a.0 >= d.num_cells())
            || data.sigma.values().any(|a| a.0 >= d.num_cells())
        {
            errs.push(Violation::new("dangling identifier", "image outside the codomain"));
            return Err(errs);
        }

        for f in c.arrows() {
            let (s, t) = (data.on_objects[c.src1(f).0], data.on_objects[c.tgt1(f).0]);
            let img = data.on_arrows[f.0];
            if d.src1(img) != s || d.tgt1(img) != t {
                errs.push(
                    Violation::new("endpoint mismatch", "F1(f) does not run from F0(src f) to F0(tgt f)")
                        .with([c.arrow_name(f), d.arrow_name(img)]),
                );
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        for a in c.cells() {
            let img = data.on_cells[a.0];
            if d.cell_src(img) != data.on_arrows[c.cell_src(a).0] || d.cell_tgt(img) != data.on_arrows[c.cell_tgt(a).0] {
                errs.push(
                    Violation::new("endpoint mismatch", "F2(a) does not run from F1(src a) to F1(tgt a)")
                        .with([c.cell_name(a), d.cell_name(img)]),
                );
            }
        }

        let n1 = c.num_arrows();
        let mut sigma = vec![None; n1 * n1];
        for (&(f, g), &cell) in &data.sigma {
            if f.0 >= n1 || g.0 >= n1 || c.comp1(f, g).is_none() {
                errs.push(Violation::new("sigma domain", "structure cell given for a non-composable pair"));
                continue;
            }
            sigma[f.0 * n1 + g.0] = Some(cell);
        }
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                let slot = &mut sigma[f.0 * n1 + g.0];
                if slot.is_none() {
                    if c.is_id1(f) {
                        *slot = Some(d.id2(data.on_arrows[g.0]));
                    } else if c.is_id1(g) {
                        *slot = Some(d.id2(data.on_arrows[f.0]));
                    } else {
                        errs.push(
                            Violation::new("partial table", "sigma missing for composable pair")
                                .with([c.arrow_name(f), c.arrow_name(g)]),
                        );
                        continue;
                    }
                }
                let cell = slot.unwrap();
                let want_src = data.on_arrows[c.comp1(f, g).unwrap().0];
                let want_tgt = d.comp1(data.on_arrows[f.0], data.on_arrows[g.0]);
                if d.cell_src(cell) != want_src || Some(d.cell_tgt(cell)) != want_tgt {
                    errs.push(
                        Violation::new("endpoint mismatch", "sigma(f,g) does not run F(g∘f) ⇒ F(g)∘F(f)")
                            .with([c.arrow_name(f), c.arrow_name(g), d.cell_name(cell)]),
                    );
                }
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }

        let functor = Self {
            dom,
            cod,
            on_objects: data.on_objects,
            on_arrows: data.on_arrows,
            on_cells: data.on_cells,
            sigma,
        };
        functor.check_laws(&mut errs);
        errs.into_result(|| functor)
    }

    fn check_laws(&self, errs: &mut ValidationErrors) {
        let (c, d) = (&*self.dom, &*self.cod);
        for o in c.objects() {
            if self.arrow(c.id1(o)) != d.id1(self.object(o)) {
                errs.push(Violation::new("normality", "F1 does not preserve an identity 1-cell").with([c.obj_name(o)]));
            }
        }
        for f in c.arrows() {
            if self.cell(c.id2(f)) != d.id2(self.arrow(f)) {
                errs.push(Violation::new("normality", "F2 does not preserve an identity 2-cell").with([c.arrow_name(f)]));
            }
            let (a, b) = (c.src1(f), c.tgt1(f));
            let unit = d.id2(self.arrow(f));
            if self.sigma(c.id1(a), f) != unit || self.sigma(f, c.id1(b)) != unit {
                errs.push(
                    Violation::new("normality", "sigma on a pair with an identity is not an identity")
                        .with([c.arrow_name(f)]),
                );
            }
        }
        for a in c.cells() {
            for b in c.cells_from(c.cell_tgt(a)) {
                let lhs = self.cell(c.vcomp(a, b).unwrap());
                if d.vcomp(self.cell(a), self.cell(b)) != Some(lhs) {
                    errs.push(
                        Violation::new("local functoriality", "F2(b·a) differs from F2(b)·F2(a)")
                            .with([c.cell_name(a), c.cell_name(b)]),
                    );
                }
            }
        }
        if !errs.is_empty() {
            return;
        }
        for a in c.cells() {
            for b in c.cells_over_from(c.tgt1(c.cell_src(a))) {
                if let Some(w) = self.naturality_failure(a, b) {
                    errs.push(w);
                }
            }
        }
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                for h in c.arrows_from(c.tgt1(g)) {
                    if !self.coherent(f, g, h) {
                        errs.push(
                            Violation::new("coherence", "the two composites F(h∘g∘f) ⇒ F(h)F(g)F(f) differ")
                                .with([c.arrow_name(f), c.arrow_name(g), c.arrow_name(h)]),
                        );
                    }
                }
            }
        }
    }

    /// `σ(f′,g′) · F(b∗a) = (F b ∗ F a) · σ(f,g)` for `a : f ⇒ f′`, `b : g ⇒ g′`.
    fn naturality_failure(&self, a: Cell, b: Cell) -> Option<Violation> {
        let (c, d) = (&*self.dom, &*self.cod);
        let ba = c.hcomp(a, b).unwrap();
        let lhs = d.vcomp(self.cell(ba), self.sigma(c.cell_tgt(a), c.cell_tgt(b)));
        let rhs = d.vcomp(
            self.sigma(c.cell_src(a), c.cell_src(b)),
            d.hcomp(self.cell(a), self.cell(b)).unwrap(),
        );
        (lhs != rhs).then(|| {
            Violation::new("naturality of sigma", "the two composites F(g∘f) ⇒ F(g′)F(f′) differ")
                .with([c.cell_name(a), c.cell_name(b)])
        })
    }

    /// `(F h ∗ σ(f,g)) · σ(g∘f, h) = (σ(g,h) ∗ F f) · σ(f, h∘g)`
    pub(crate) fn coherent(&self, f: Arrow, g: Arrow, h: Arrow) -> bool {
        let (c, d) = (&*self.dom, &*self.cod);
        let gf = c.comp1(f, g).unwrap();
        let hg = c.comp1(g, h).unwrap();
        let lhs = d.vcomp(self.sigma(gf, h), d.whisker_post(self.sigma(f, g), self.arrow(h)).unwrap());
        let rhs = d.vcomp(self.sigma(f, hg), d.whisker_pre(self.arrow(f), self.sigma(g, h)).unwrap());
        lhs.is_some() && lhs == rhs
    }

    /// The identity lax functor on `c`.
    pub fn identity(c: Arc<TwoCat>) -> Self {
        let n1 = c.num_arrows();
        let mut sigma = vec![None; n1 * n1];
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                sigma[f.0 * n1 + g.0] = Some(c.id2(c.comp1(f, g).unwrap()));
            }
        }
        Self {
            on_objects: c.objects().collect(),
            on_arrows: c.arrows().collect(),
            on_cells: c.cells().collect(),
            dom: c.clone(),
            cod: c,
            sigma,
        }
    }

    /// The strict 2-functor between 2-discrete 2-categories induced by
    /// ordinary functor data; `None` if it is not a functor.
    pub fn strict_from_functor(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_objects: Vec<Obj>,
        on_arrows: Vec<Arrow>,
    ) -> Option<Self> {
        let mut sigma = BTreeMap::new();
        for f in dom.arrows() {
            for g in dom.arrows_from(dom.tgt1(f)) {
                let img = on_arrows[dom.comp1(f, g)?.0];
                sigma.insert((f, g), cod.id2(img));
            }
        }
        let on_cells = dom.cells().map(|a| cod.id2(on_arrows[dom.cell_src(a).0])).collect();
        Self::validate(
            dom,
            cod,
            LaxFunctorData {
                on_objects,
                on_arrows,
                on_cells,
                sigma,
            },
        )
        .ok()
    }

    pub(crate) fn from_parts_unchecked(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_objects: Vec<Obj>,
        on_arrows: Vec<Arrow>,
        on_cells: Vec<Cell>,
        sigma: Vec<Option<Cell>>,
    ) -> Self {
        Self {
            dom,
            cod,
            on_objects,
            on_arrows,
            on_cells,
            sigma,
        }
    }

    pub fn dom(&self) -> &Arc<TwoCat> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<TwoCat> {
        &self.cod
    }

    pub fn object(&self, o: Obj) -> Obj {
        self.on_objects[o.0]
    }

    pub fn arrow(&self, f: Arrow) -> Arrow {
        self.on_arrows[f.0]
    }

    pub fn cell(&self, a: Cell) -> Cell {
        self.on_cells[a.0]
    }

    /// `σ(f, g) : F(g∘f) ⇒ F(g)∘F(f)`. Panics unless `f`, `g` are composable.
    pub fn sigma(&self, f: Arrow, g: Arrow) -> Cell {
        self.sigma[f.0 * self.dom.num_arrows() + g.0].expect("sigma is defined on composable pairs")
    }

    /// True iff every structure cell is an identity.
    pub fn is_strict(&self) -> bool {
        self.sigma.iter().flatten().all(|&c| self.cod.is_id2(c))
    }

    pub fn data(&self) -> LaxFunctorData {
        let mut sigma = BTreeMap::new();
        for f in self.dom.arrows() {
            for g in self.dom.arrows_from(self.dom.tgt1(f)) {
                sigma.insert((f, g), self.sigma(f, g));
            }
        }
        LaxFunctorData {
            on_objects: self.on_objects.clone(),
            on_arrows: self.on_arrows.clone(),
            on_cells: self.on_cells.clone(),
            sigma,
        }
    }

    /// Canonical sort key: the object, 1-cell, 2-cell and structure tables in
    /// that order.
    pub fn canonical_key(&self) -> Vec<usize> {
        self.on_objects
            .iter()
            .map(|o| o.0)
            .chain(self.on_arrows.iter().map(|f| f.0))
            .chain(self.on_cells.iter().map(|c| c.0))
            .chain(self.sigma.iter().flatten().map(|c| c.0))
            .collect()
    }

    /// Composite `G ∘ F` (this is `F`), with
    /// `σ(f,g) = σ^G(F f, F g) · G(σ^F(f,g))`.
    pub fn then(&self, g: &LaxFunctor) -> Result<LaxFunctor> {
        compose_lax_functors(g, self)
    }

    pub fn to_file(&self, dom: FileRef<TwoCatFile>, cod: FileRef<TwoCatFile>) -> LaxFunctorFile {
        let (c, d) = (&*self.dom, &*self.cod);
        let mut sigma = Vec::new();
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                sigma.push(SigmaEntry {
                    f: c.arrow_name(f).into(),
                    g: c.arrow_name(g).into(),
                    two_cell: d.cell_name(self.sigma(f, g)).into(),
                });
            }
        }
        LaxFunctorFile {
            dom,
            cod,
            f0: c
                .objects()
                .map(|o| (c.obj_name(o).to_string(), d.obj_name(self.object(o)).to_string()))
                .collect(),
            f1: c
                .arrows()
                .map(|f| (c.arrow_name(f).to_string(), d.arrow_name(self.arrow(f)).to_string()))
                .collect(),
            f2: c
                .cells()
                .map(|a| (c.cell_name(a).to_string(), d.cell_name(self.cell(a)).to_string()))
                .collect(),
            sigma,
        }
    }

    /// Resolves the names in an interchange document against `dom`/`cod`
    /// and validates.
    pub fn from_file(file: &LaxFunctorFile, dom: Arc<TwoCat>, cod: Arc<TwoCat>) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let (c, d) = (&*dom, &*cod);
        let mut resolve_map = |map: &BTreeMap<String, String>,
                               what: &str,
                               keys: Vec<String>,
                               find: &dyn Fn(&str) -> Option<usize>|
         -> Vec<usize> {
            let mut out = Vec::with_capacity(keys.len());
            for k in &keys {
                match map.get(k).map(|v| (v, find(v))) {
                    Some((_, Some(ix))) => out.push(ix),
                    Some((v, None)) => {
                        errs.push(Violation::new("dangling identifier", format!("{what} image `{v}` is unknown")).with([k.clone()]));
                        out.push(0);
                    }
                    None => {
                        errs.push(Violation::new("partial table", format!("{what} has no image")).with([k.clone()]));
                        out.push(0);
                    }
                }
            }
            for k in map.keys() {
                if !keys.contains(k) {
                    errs.push(Violation::new("dangling identifier", format!("{what} key `{k}` is unknown")).with([k.clone()]));
                }
            }
            out
        };
        let on_objects = resolve_map(
            &file.f0,
            "F0",
            c.objects().map(|o| c.obj_name(o).to_string()).collect(),
            &|s| d.find_obj(s).map(|o| o.0),
        );
        let on_arrows = resolve_map(
            &file.f1,
            "F1",
            c.arrows().map(|f| c.arrow_name(f).to_string()).collect(),
            &|s| d.find_arrow(s).map(|f| f.0),
        );
        let on_cells = resolve_map(
            &file.f2,
            "F2",
            c.cells().map(|a| c.cell_name(a).to_string()).collect(),
            &|s| d.find_cell(s).map(|a| a.0),
        );
        let mut sigma = BTreeMap::new();
        for SigmaEntry { f, g, two_cell } in &file.sigma {
            match (c.find_arrow(f), c.find_arrow(g), d.find_cell(two_cell)) {
                (Some(f), Some(g), Some(a)) => {
                    sigma.insert((f, g), a);
                }
                _ => errs.push(
                    Violation::new("dangling identifier", "sigma entry refers to unknown cells")
                        .with([f.clone(), g.clone(), two_cell.clone()]),
                ),
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        Self::validate(
            dom,
            cod,
            LaxFunctorData {
                on_objects: on_objects.into_iter().map(Obj).collect(),
                on_arrows: on_arrows.into_iter().map(Arrow).collect(),
                on_cells: on_cells.into_iter().map(Cell).collect(),
                sigma,
            },
        )
    }
}

/// `G ∘ F`, defined when `cod(F) = dom(G)`.
pub fn compose_lax_functors(g: &LaxFunctor, f: &LaxFunctor) -> Result<LaxFunctor> {
    if !Arc::ptr_eq(&f.cod, &g.dom) && f.cod != g.dom {
        return Err(Error::Mismatch("codomain of the first functor is not the domain of the second".into()));
    }
    let (c, e) = (&*f.dom, &*g.cod);
    let n1 = c.num_arrows();
    let mut sigma = vec![None; n1 * n1];
    for a in c.arrows() {
        for b in c.arrows_from(c.tgt1(a)) {
            let inner = g.cell(f.sigma(a, b));
            let outer = g.sigma(f.arrow(a), f.arrow(b));
            sigma[a.0 * n1 + b.0] = Some(e.vcomp(inner, outer).expect("composite structure cells are composable"));
        }
    }
    Ok(LaxFunctor::from_parts_unchecked(
        f.dom.clone(),
        g.cod.clone(),
        f.on_objects.iter().map(|&o| g.object(o)).collect(),
        f.on_arrows.iter().map(|&a| g.arrow(a)).collect(),
        f.on_cells.iter().map(|&a| g.cell(a)).collect(),
        sigma,
    ))
}

/// Index-level data of a candidate lax transformation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformationData {
    /// `α_A` for each object of the domain.
    pub components: Vec<Arrow>,
    /// `s_f` for each 1-cell of the domain.
    pub structure: Vec<Cell>,
}

/// A validated lax natural transformation between parallel lax functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxTransformation {
    source: LaxFunctor,
    target: LaxFunctor,
    components: Vec<Arrow>,
    structure: Vec<Cell>,
}

impl LaxTransformation {
    pub fn validate(
        source: &LaxFunctor,
        target: &LaxFunctor,
        data: TransformationData,
    ) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        if source.dom != target.dom || source.cod != target.cod {
            errs.push(Violation::new("parallel functors", "source and target have different domain or codomain"));
            return Err(errs);
        }
        let (c, d) = (&*source.dom, &*source.cod);
        if data.components.len() != c.num_objects() || data.structure.len() != c.num_arrows() {
            errs.push(Violation::new("level mismatch", "component or structure table has the wrong length"));
            return Err(errs);
        }
        if data.components.iter().any(|f| f.0 >= d.num_arrows()) || data.structure.iter().any(|a| a.0 >= d.num_cells())
        {
            errs.push(Violation::new("dangling identifier", "component outside the codomain"));
            return Err(errs);
        }
        for o in c.objects() {
            let a = data.components[o.0];
            if d.src1(a) != source.object(o) || d.tgt1(a) != target.object(o) {
                errs.push(
                    Violation::new("component endpoint mismatch", "α_A does not run F(A) → G(A)")
                        .with([c.obj_name(o), d.arrow_name(a)]),
                );
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        for f in c.arrows() {
            let s = data.structure[f.0];
            let (a, b) = (c.src1(f), c.tgt1(f));
            let want_src = d.comp1(source.arrow(f), data.components[b.0]).unwrap();
            let want_tgt = d.comp1(data.components[a.0], target.arrow(f)).unwrap();
            if d.cell_src(s) != want_src || d.cell_tgt(s) != want_tgt {
                errs.push(
                    Violation::new("structure endpoint mismatch", "s_f does not run α_B∘F(f) ⇒ G(f)∘α_A")
                        .with([c.arrow_name(f), d.cell_name(s)]),
                );
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        let t = Self {
            source: source.clone(),
            target: target.clone(),
            components: data.components,
            structure: data.structure,
        };
        for o in c.objects() {
            if t.structure(c.id1(o)) != d.id2(t.component(o)) {
                errs.push(Violation::new("unit", "s on an identity 1-cell is not an identity").with([c.obj_name(o)]));
            }
        }
        for beta in c.cells() {
            if !t.natural_at(beta) {
                errs.push(
                    Violation::new("naturality in 2-cells", "(G β ∗ α_A)·s_f differs from s_f′·(α_B ∗ F β)")
                        .with([c.cell_name(beta)]),
                );
            }
        }
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                if !t.coherent_at(f, g) {
                    errs.push(
                        Violation::new("composition coherence", "the two composites α_C∘F(g∘f) ⇒ G(g)G(f)α_A differ")
                            .with([c.arrow_name(f), c.arrow_name(g)]),
                    );
                }
            }
        }
        errs.into_result(|| t)
    }

    pub(crate) fn from_parts_unchecked(
        source: &LaxFunctor,
        target: &LaxFunctor,
        components: Vec<Arrow>,
        structure: Vec<Cell>,
    ) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            components,
            structure,
        }
    }

    fn natural_at(&self, beta: Cell) -> bool {
        natural_at(&self.source, &self.target, &self.components, &self.structure, beta)
    }

    fn coherent_at(&self, f: Arrow, g: Arrow) -> bool {
        coherent_at(&self.source, &self.target, &self.components, &self.structure, f, g)
    }

    /// The identity transformation on `f`.
    pub fn identity(f: &LaxFunctor) -> Self {
        let (c, d) = (&*f.dom, &*f.cod);
        Self {
            source: f.clone(),
            target: f.clone(),
            components: c.objects().map(|o| d.id1(f.object(o))).collect(),
            structure: c.arrows().map(|a| d.id2(f.arrow(a))).collect(),
        }
    }

    pub fn source(&self) -> &LaxFunctor {
        &self.source
    }

    pub fn target(&self) -> &LaxFunctor {
        &self.target
    }

    pub fn component(&self, o: Obj) -> Arrow {
        self.components[o.0]
    }

    pub fn structure(&self, f: Arrow) -> Cell {
        self.structure[f.0]
    }

    pub fn data(&self) -> TransformationData {
        TransformationData {
            components: self.components.clone(),
            structure: self.structure.clone(),
        }
    }

    /// Whether every component is an identity 1-cell.
    pub fn has_identity_components(&self) -> bool {
        self.components.iter().all(|&a| self.source.cod.is_id1(a))
    }
}

/// `(G β ∗ α_A) · s_f = s_f′ · (α_B ∗ F β)` for `β : f ⇒ f′`.
pub(crate) fn natural_at(f: &LaxFunctor, g: &LaxFunctor, comp: &[Arrow], s: &[Cell], beta: Cell) -> bool {
    let (c, d) = (&*f.dom, &*f.cod);
    let (a0, a1) = (c.cell_src(beta), c.cell_tgt(beta));
    let (src, tgt) = (c.src1(a0), c.tgt1(a0));
    let lhs = d.vcomp(s[a0.0], d.whisker_pre(comp[src.0], g.cell(beta)).unwrap());
    let rhs = d.vcomp(d.whisker_post(f.cell(beta), comp[tgt.0]).unwrap(), s[a1.0]);
    lhs.is_some() && lhs == rhs
}

/// `(G g ∗ s_f)·(s_g ∗ F f)·(α_C ∗ σ^F(f,g)) = (σ^G(f,g) ∗ α_A)·s_{g∘f}`
pub(crate) fn coherent_at(fun: &LaxFunctor, gun: &LaxFunctor, comp: &[Arrow], s: &[Cell], f: Arrow, g: Arrow) -> bool {
    let (c, d) = (&*fun.dom, &*fun.cod);
    let (a, cc) = (c.src1(f), c.tgt1(g));
    let gf = c.comp1(f, g).unwrap();
    let lhs = d.vcomp_chain(&[
        d.whisker_post(fun.sigma(f, g), comp[cc.0]).unwrap(),
        d.whisker_pre(fun.arrow(f), s[g.0]).unwrap(),
        d.whisker_post(s[f.0], gun.arrow(g)).unwrap(),
    ]);
    let rhs = d.vcomp(s[gf.0], d.whisker_pre(comp[a.0], gun.sigma(f, g)).unwrap());
    lhs.is_some() && lhs == rhs
}

//! The geometric nerve of a finite 2-category and its action on lax
//! functors and lax transformations.
//!
//! * vertices are objects and edges are 1-cells, `d_0 f = tgt f`,
//!   `d_1 f = src f`;
//! * a 2-simplex `(g, h, f; α)` has `d_0 = g`, `d_1 = h`, `d_2 = f` and an
//!   interior `α : h ⇒ g∘f`;
//! * a 3-simplex is a commuting tetrahedron of 2-simplices;
//! * `s_0 f = (f, f, 1; 1_f)` and `s_1 f = (1, f, f; 1_f)`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::laxfun::{LaxFunctor, LaxFunctorData, LaxTransformation, TransformationData};
use crate::simpl::{Homotopy, HomotopyData, SimplicialMap, TruncSSet, TOP};
use crate::twocat::{Arrow, Cell, Obj, TwoCat};

/// A 2-simplex `(g, h, f; α)`: `f : A0 → A1`, `g : A1 → A2`, `h : A0 → A2`
/// and `α : h ⇒ g∘f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex2 {
    pub g: Arrow,
    pub h: Arrow,
    pub f: Arrow,
    pub alpha: Cell,
}

impl Simplex2 {
    /// Checks the boundary against `c`.
    pub fn new(c: &TwoCat, g: Arrow, h: Arrow, f: Arrow, alpha: Cell) -> Option<Self> {
        let gf = c.comp1(f, g)?;
        (c.src1(h) == c.src1(f) && c.tgt1(h) == c.tgt1(g) && c.cell_src(alpha) == h && c.cell_tgt(alpha) == gf)
            .then_some(Self { g, h, f, alpha })
    }

    /// Edges opposite to vertex 0, 1, 2.
    pub fn faces(&self) -> [Arrow; 3] {
        [self.g, self.h, self.f]
    }

    pub fn name(&self, c: &TwoCat) -> String {
        format!(
            "({},{},{};{})",
            c.arrow_name(self.g),
            c.arrow_name(self.h),
            c.arrow_name(self.f),
            c.cell_name(self.alpha)
        )
    }
}

/// A 3-simplex: faces `Δ0 = (m, l, g; ρ)`, `Δ1 = (m, k, h; φ)`,
/// `Δ2 = (l, k, f; λ)`, `Δ3 = (g, h, f; β)` on edges `f = 01`, `g = 12`,
/// `h = 02`, `k = 03`, `l = 13`, `m = 23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplex3 {
    pub faces: [Simplex2; 4],
}

impl Simplex3 {
    /// Edges in the order `01, 12, 02, 03, 13, 23`.
    pub fn edges(&self) -> [Arrow; 6] {
        let [d0, d1, _, d3] = self.faces;
        [d3.f, d3.g, d3.h, d1.h, d0.h, d0.g]
    }

    pub fn name(&self, c: &TwoCat) -> String {
        let e: Vec<&str> = self.edges().iter().map(|&a| c.arrow_name(a)).collect();
        let i: Vec<&str> = self.faces.iter().map(|d| c.cell_name(d.alpha)).collect();
        format!("[{};{}]", e.join(","), i.join(","))
    }
}

fn incident(faces: &[Simplex2; 4]) -> bool {
    let [d0, d1, d2, d3] = faces;
    d0.g == d1.g && d0.h == d2.g && d0.f == d3.g && d1.h == d2.h && d1.f == d3.h && d2.f == d3.f
}

fn commutes_unchecked(c: &TwoCat, faces: &[Simplex2; 4]) -> bool {
    let [rho, phi, lambda, beta] = faces;
    let m = rho.g;
    let f = beta.f;
    let lhs = c.vcomp(phi.alpha, c.whisker_post(beta.alpha, m).unwrap());
    let rhs = c.vcomp(lambda.alpha, c.whisker_pre(f, rho.alpha).unwrap());
    lhs.is_some() && lhs == rhs
}

/// Whether the square `mβ · φ = ρf · λ` of 2-cells `k ⇒ m∘g∘f` commutes.
/// Errors if the faces do not fit together as a tetrahedron.
pub fn tetrahedron_commutes(c: &TwoCat, faces: &[Simplex2; 4]) -> Result<bool> {
    if !incident(faces) {
        return Err(Error::Mismatch("faces do not share edges as a tetrahedron".into()));
    }
    Ok(commutes_unchecked(c, faces))
}

/// The geometric nerve of a 2-category together with the decoding of its
/// simplices. Vertex and edge indices coincide with object and 1-cell
/// indices.
#[derive(Debug, Clone)]
pub struct Nerve {
    cat: Arc<TwoCat>,
    sset: Arc<TruncSSet>,
    s2: Vec<Simplex2>,
    s2_index: HashMap<Simplex2, usize>,
    s3: Vec<Simplex3>,
}

impl Nerve {
    pub fn new(cat: Arc<TwoCat>) -> Self {
        let c = &*cat;
        let mut s2 = Vec::new();
        let mut by_spine: HashMap<(Arrow, Arrow), Vec<Simplex2>> = HashMap::new();
        for f in c.arrows() {
            for g in c.arrows_from(c.tgt1(f)) {
                let gf = c.comp1(f, g).unwrap();
                for &h in c.arrows_between(c.src1(f), c.tgt1(g)) {
                    for &alpha in c.cells_between(h, gf) {
                        let s = Simplex2 { g, h, f, alpha };
                        s2.push(s);
                        by_spine.entry((f, g)).or_default().push(s);
                    }
                }
            }
        }
        let mut s3 = Vec::new();
        for &d3 in &s2 {
            for m in c.arrows_from(c.tgt1(d3.g)) {
                for &d0 in by_spine.get(&(d3.g, m)).into_iter().flatten() {
                    for &d2 in by_spine.get(&(d3.f, d0.h)).into_iter().flatten() {
                        for &d1 in by_spine.get(&(d3.h, m)).into_iter().flatten() {
                            let faces = [d0, d1, d2, d3];
                            if d1.h == d2.h && commutes_unchecked(c, &faces) {
                                s3.push(Simplex3 { faces });
                            }
                        }
                    }
                }
            }
        }

        let names2: Vec<String> = s2.iter().map(|s| s.name(c)).collect();
        let names3: Vec<String> = s3.iter().map(|s| s.name(c)).collect();
        let s2_pos: HashMap<Simplex2, usize> = s2.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let s3_pos: HashMap<[usize; 4], usize> = s3
            .iter()
            .enumerate()
            .map(|(i, s)| (s.faces.map(|d| s2_pos[&d]), i))
            .collect();
        let degen1 = |i: usize, f: Arrow| -> Simplex2 {
            if i == 0 {
                Simplex2 { g: f, h: f, f: c.id1(c.src1(f)), alpha: c.id2(f) }
            } else {
                Simplex2 { g: c.id1(c.tgt1(f)), h: f, f, alpha: c.id2(f) }
            }
        };
        let degen2 = |i: usize, d: &Simplex2| -> Simplex3 {
            let face = |a: usize| -> Simplex2 {
                if a == i || a == i + 1 {
                    *d
                } else if a < i {
                    degen1(i - 1, d.faces()[a])
                } else {
                    degen1(i, d.faces()[a - 1])
                }
            };
            Simplex3 {
                faces: [face(0), face(1), face(2), face(3)],
            }
        };
        let levels = vec![
            c.objects().map(|o| c.obj_name(o).to_string()).collect(),
            c.arrows().map(|f| c.arrow_name(f).to_string()).collect(),
            names2.clone(),
            names3.clone(),
        ];
        let sset = TruncSSet::from_named(
            levels,
            |n, i, x| match n {
                1 => {
                    let f = Arrow(x);
                    c.obj_name(if i == 0 { c.tgt1(f) } else { c.src1(f) }).to_string()
                }
                2 => c.arrow_name(s2[x].faces()[i]).to_string(),
                _ => names2[s2_pos[&s3[x].faces[i]]].clone(),
            },
            |n, i, x| match n {
                0 => c.arrow_name(c.id1(Obj(x))).to_string(),
                1 => names2[s2_pos[&degen1(i, Arrow(x))]].clone(),
                _ => {
                    let t = degen2(i, &s2[x]);
                    names3[s3_pos[&t.faces.map(|d| s2_pos[&d])]].clone()
                }
            },
            true,
        )
        .expect("the geometric nerve is a coskeletal simplicial set");

        let mut sorted2 = vec![None; sset.size(2)];
        for (s, n) in s2.iter().zip(&names2) {
            sorted2[sset.find(2, n).unwrap()] = Some(*s);
        }
        let sorted2: Vec<Simplex2> = sorted2.into_iter().map(Option::unwrap).collect();
        let mut sorted3 = vec![None; sset.size(3)];
        for (s, n) in s3.iter().zip(&names3) {
            sorted3[sset.find(3, n).unwrap()] = Some(*s);
        }
        let sorted3: Vec<Simplex3> = sorted3.into_iter().map(Option::unwrap).collect();
        let s2_index = sorted2.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Self {
            cat,
            sset: Arc::new(sset),
            s2: sorted2,
            s2_index,
            s3: sorted3,
        }
    }

    pub fn two_cat(&self) -> &Arc<TwoCat> {
        &self.cat
    }

    pub fn sset(&self) -> &Arc<TruncSSet> {
        &self.sset
    }

    pub fn simplex2(&self, x: usize) -> &Simplex2 {
        &self.s2[x]
    }

    pub fn simplex3(&self, x: usize) -> &Simplex3 {
        &self.s3[x]
    }

    pub fn find2(&self, s: &Simplex2) -> Option<usize> {
        self.s2_index.get(s).copied()
    }

    /// The 3-simplex with the given faces (as 2-simplex indices).
    pub fn find3(&self, faces: &[usize; 4]) -> Option<usize> {
        self.sset.with_boundary(TOP, faces).first().copied()
    }

    fn find3_of(&self, faces: [Simplex2; 4]) -> Option<usize> {
        let ix = [
            self.find2(&faces[0])?,
            self.find2(&faces[1])?,
            self.find2(&faces[2])?,
            self.find2(&faces[3])?,
        ];
        self.find3(&ix)
    }
}

/// The geometric nerve as a truncated simplicial set.
pub fn nerve_of_two_category(c: &Arc<TwoCat>) -> Arc<TruncSSet> {
    Nerve::new(c.clone()).sset.clone()
}

fn same_cat(a: &Arc<TwoCat>, b: &Arc<TwoCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `ner(F) : ner(dom F) → ner(cod F)`. On 2-simplices
/// `(g, h, f; α) ↦ (F g, F h, F f; σ(f,g) · F α)`; level 3 follows from
/// faces.
pub fn nerve_of_lax_functor(f: &LaxFunctor, dom: &Nerve, cod: &Nerve) -> Result<SimplicialMap> {
    if !same_cat(f.dom(), &dom.cat) || !same_cat(f.cod(), &cod.cat) {
        return Err(Error::Mismatch("nerves do not belong to the functor's domain and codomain".into()));
    }
    let d = &*cod.cat;
    let level0 = (0..dom.sset.size(0)).map(|o| f.object(Obj(o)).0).collect();
    let level1 = (0..dom.sset.size(1)).map(|a| f.arrow(Arrow(a)).0).collect();
    let level2 = dom
        .s2
        .iter()
        .map(|s| {
            let alpha = d.vcomp(f.cell(s.alpha), f.sigma(s.f, s.g)).expect("σ(f,g)·F(α) is composable");
            let img = Simplex2 {
                g: f.arrow(s.g),
                h: f.arrow(s.h),
                f: f.arrow(s.f),
                alpha,
            };
            cod.find2(&img).expect("image of a 2-simplex is a 2-simplex")
        })
        .collect();
    SimplicialMap::validate(dom.sset.clone(), cod.sset.clone(), vec![level0, level1, level2]).map_err(Error::from)
}

/// Reads a lax functor off a simplicial map between nerves:
/// `F2(α : h ⇒ f)` is the interior of `Φ(1, h, f; α)` and `σ(f, g)` the
/// interior of `Φ(g, g∘f, f; 1)`.
pub fn reconstruct_lax_functor(phi: &SimplicialMap, dom: &Nerve, cod: &Nerve) -> Result<LaxFunctor> {
    if phi.dom() != &dom.sset || phi.cod() != &cod.sset {
        return Err(Error::Mismatch("map is not between the nerves of the given 2-categories".into()));
    }
    let c = &*dom.cat;
    let interior = |s: Simplex2| -> Cell {
        let x = dom.find2(&s).expect("degenerate-edge 2-simplices exist in the nerve");
        cod.s2[phi.apply(2, x)].alpha
    };
    let on_cells = c
        .cells()
        .map(|a| {
            let f = c.cell_tgt(a);
            interior(Simplex2 {
                g: c.id1(c.tgt1(f)),
                h: c.cell_src(a),
                f,
                alpha: a,
            })
        })
        .collect();
    let mut sigma = std::collections::BTreeMap::new();
    for f in c.arrows() {
        for g in c.arrows_from(c.tgt1(f)) {
            let gf = c.comp1(f, g).unwrap();
            sigma.insert((f, g), interior(Simplex2 { g, h: gf, f, alpha: c.id2(gf) }));
        }
    }
    let data = LaxFunctorData {
        on_objects: phi.level(0).iter().map(|&o| Obj(o)).collect(),
        on_arrows: phi.level(1).iter().map(|&a| Arrow(a)).collect(),
        on_cells,
        sigma,
    };
    Ok(LaxFunctor::validate(dom.cat.clone(), cod.cat.clone(), data)?)
}

/// The homotopy `ner(G) ⇒ ner(F)` induced by `α : F ⇒ G`; its level-0
/// components are the `α_A : F(A) → G(A)`.
pub fn nerve_of_transformation(t: &LaxTransformation, dom: &Nerve, cod: &Nerve) -> Result<Homotopy> {
    let (fun, gun) = (t.source(), t.target());
    let q = nerve_of_lax_functor(fun, dom, cod)?;
    let p = nerve_of_lax_functor(gun, dom, cod)?;
    let (c, d) = (&*dom.cat, &*cod.cat);
    let diag = |f: Arrow| d.comp1(fun.arrow(f), t.component(c.tgt1(f))).unwrap();
    let h01 = |f: Arrow| Simplex2 {
        g: gun.arrow(f),
        h: diag(f),
        f: t.component(c.src1(f)),
        alpha: t.structure(f),
    };
    let h11 = |f: Arrow| Simplex2 {
        g: t.component(c.tgt1(f)),
        h: diag(f),
        f: fun.arrow(f),
        alpha: d.id2(diag(f)),
    };
    let find2 = |s: Simplex2| cod.find2(&s).ok_or_else(|| Error::Mismatch("transformation 2-simplex missing from the nerve".into()));
    let find3 = |faces: [Simplex2; 4]| {
        cod.find3_of(faces)
            .ok_or_else(|| Error::Mismatch("transformation tetrahedron does not commute".into()))
    };

    let level0 = vec![c.objects().map(|o| t.component(o).0).collect()];
    let level1 = vec![
        c.arrows().map(|f| find2(h01(f))).collect::<Result<Vec<_>>>()?,
        c.arrows().map(|f| find2(h11(f))).collect::<Result<Vec<_>>>()?,
    ];
    let mut level2 = vec![Vec::new(), Vec::new(), Vec::new()];
    for s in &dom.s2 {
        let a2 = c.tgt1(s.g);
        let lower = d.vcomp(fun.cell(s.alpha), fun.sigma(s.f, s.g)).unwrap();
        let whiskered = d.whisker_post(lower, t.component(a2)).unwrap();
        let u = Simplex2 {
            g: gun.arrow(s.g),
            h: diag(s.h),
            f: diag(s.f),
            alpha: d.vcomp(whiskered, d.whisker_pre(fun.arrow(s.f), t.structure(s.g)).unwrap()).unwrap(),
        };
        let v = Simplex2 {
            g: diag(s.g),
            h: diag(s.h),
            f: fun.arrow(s.f),
            alpha: whiskered,
        };
        let image = |m: &SimplicialMap| cod.s2[m.apply(2, dom.s2_index[s])];
        level2[0].push(find3([image(&p), u, h01(s.h), h01(s.f)])?);
        level2[1].push(find3([h01(s.g), u, v, h11(s.f)])?);
        level2[2].push(find3([h11(s.g), h11(s.h), v, image(&q)])?);
    }
    Ok(Homotopy::validate(
        &p,
        &q,
        HomotopyData {
            components: vec![level0, level1, level2],
        },
    )?)
}

/// The lax transformation `G ⇒ F` carried by a homotopy `ner(F) ⇒ ner(G)`
/// into the nerve of a 2-groupoid: `α_A = h_0^0(A)` and
/// `s_f = θ_0 · θ_1⁻¹` where `θ_j` is the interior of `h_j^1(f)`.
pub fn transformation_from_homotopy(
    h: &Homotopy,
    f: &LaxFunctor,
    g: &LaxFunctor,
    dom: &Nerve,
    cod: &Nerve,
) -> Result<LaxTransformation> {
    let d = &*cod.cat;
    if !d.is_two_groupoid() {
        return Err(Error::NotGroupoid("the codomain 2-category is not a 2-groupoid".into()));
    }
    if h.p() != &nerve_of_lax_functor(f, dom, cod)? || h.q() != &nerve_of_lax_functor(g, dom, cod)? {
        return Err(Error::Mismatch("homotopy does not run between the nerves of the given functors".into()));
    }
    let c = &*dom.cat;
    let components = c.objects().map(|o| Arrow(h.component(0, 0, o.0))).collect();
    let structure = c
        .arrows()
        .map(|a| {
            let theta0 = cod.s2[h.component(1, 0, a.0)].alpha;
            let theta1 = cod.s2[h.component(1, 1, a.0)].alpha;
            d.vcomp(d.inverse2(theta1).unwrap(), theta0).unwrap()
        })
        .collect();
    Ok(LaxTransformation::validate(g, f, TransformationData { components, structure })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::{automorphism_two_groupoid, FiniteGroup, GroupFamily};
    use crate::laxfun::{enumerate_lax_functors, enumerate_lax_transformations, ComponentPolicy};
    use crate::search::Budget;
    use crate::simpl::{classic_nerve, enumerate_simplicial_maps, find_homotopy, spine_map};
    use crate::twocat::{delta_two_category, from_category, terminal, Category};

    fn aut(n: usize) -> Arc<TwoCat> {
        Arc::new(automorphism_two_groupoid(&GroupFamily::single(FiniteGroup::cyclic(n))))
    }

    fn z2() -> Arc<TwoCat> {
        Arc::new(from_category(&Category::cyclic_group(2)))
    }

    #[test]
    fn level_sizes() {
        assert_eq!(nerve_of_two_category(&Arc::new(delta_two_category(2))).sizes(), [3, 6, 10, 15]);
        assert_eq!(nerve_of_two_category(&Arc::new(terminal())).sizes(), [1, 1, 1, 1]);
        assert_eq!(nerve_of_two_category(&z2()).sizes(), [1, 2, 4, 8]);
    }

    #[test]
    fn simplex_nerve_matches_classic_nerve() {
        let ours = nerve_of_two_category(&Arc::new(delta_two_category(2)));
        let theirs = Arc::new(classic_nerve(&Category::ordinal(2)));
        let phi0 = (0..3).map(|v| theirs.find(0, ours.name(0, v)).unwrap()).collect();
        let phi1 = (0..6).map(|e| theirs.find(1, ours.name(1, e)).unwrap()).collect();
        assert!(spine_map(ours, theirs, phi0, phi1).unwrap().is_bijective());
    }

    #[test]
    fn tetrahedra() {
        let d3 = delta_two_category(3);
        let n = Nerve::new(Arc::new(d3.clone()));
        let nondegenerate = (0..n.sset().size(3)).filter(|&x| n.sset().degeneracy_of(3, x).is_none()).count();
        assert_eq!(nondegenerate, 1);
        let t = n.simplex3((0..n.sset().size(3)).find(|&x| n.sset().degeneracy_of(3, x).is_none()).unwrap());
        assert!(tetrahedron_commutes(&d3, &t.faces).unwrap());
        let mut broken = t.faces;
        broken.swap(0, 3);
        assert!(tetrahedron_commutes(&d3, &broken).is_err());

        // in Aut(Z3) all edges are the identity; interiors are elements of Z3
        let a = aut(3);
        let id = a.find_arrow("*>*:0,1,2").unwrap();
        let cell = |k: &str| a.find_cell(&format!("*>*:0,1,2=>*>*:0,1,2@{k}")).unwrap();
        let s = |k: &str| Simplex2::new(&a, id, id, id, cell(k)).unwrap();
        // φ + β = λ + ρ in Z3
        assert!(tetrahedron_commutes(&a, &[s("1"), s("2"), s("1"), s("0")]).unwrap());
        assert!(!tetrahedron_commutes(&a, &[s("1"), s("1"), s("1"), s("0")]).unwrap());
    }

    #[test]
    fn full_and_faithful_for_z2_into_aut_z3() {
        let (c, d) = (z2(), aut(3));
        let (nc, nd) = (Nerve::new(c.clone()), Nerve::new(d.clone()));
        let mut budget = Budget::default();
        let fs = enumerate_lax_functors(&c, &d, None, &mut budget).unwrap();
        let maps: Vec<_> = fs.iter().map(|f| nerve_of_lax_functor(f, &nc, &nd).unwrap()).collect();
        for i in 0..maps.len() {
            for j in 0..i {
                assert_ne!(maps[i], maps[j]);
            }
            assert_eq!(reconstruct_lax_functor(&maps[i], &nc, &nd).unwrap(), fs[i]);
        }
        let all = enumerate_simplicial_maps(nc.sset(), nd.sset(), &mut budget).unwrap();
        assert_eq!(all.len(), 4);
        for phi in &all {
            let f = reconstruct_lax_functor(phi, &nc, &nd).unwrap();
            assert_eq!(&nerve_of_lax_functor(&f, &nc, &nd).unwrap(), phi);
        }
    }

    #[test]
    fn identity_functor_gives_identity_map() {
        let c = aut(3);
        let n = Nerve::new(c.clone());
        let m = nerve_of_lax_functor(&LaxFunctor::identity(c), &n, &n).unwrap();
        assert_eq!(m, SimplicialMap::identity(n.sset().clone()));
    }

    #[test]
    fn transformations_and_homotopies_round_trip() {
        for k in [2, 3] {
            let (c, d) = (z2(), aut(k));
            let (nc, nd) = (Nerve::new(c.clone()), Nerve::new(d.clone()));
            let mut budget = Budget::default();
            let fs = enumerate_lax_functors(&c, &d, None, &mut budget).unwrap();
            for f in &fs {
                for g in &fs {
                    let ts = enumerate_lax_transformations(f, g, ComponentPolicy::Any, &mut budget).unwrap();
                    for t in &ts {
                        let h = nerve_of_transformation(t, &nc, &nd).unwrap();
                        let back = transformation_from_homotopy(&h, g, f, &nc, &nd).unwrap();
                        assert_eq!(&back, t);
                    }
                    let (nf, ng) = (nerve_of_lax_functor(f, &nc, &nd).unwrap(), nerve_of_lax_functor(g, &nc, &nd).unwrap());
                    let h = find_homotopy(&ng, &nf, &mut budget).unwrap();
                    assert_eq!(h.is_some(), !ts.is_empty());
                }
            }
        }
    }

    #[test]
    fn identity_transformation_gives_constant_homotopy() {
        let (c, d) = (z2(), aut(3));
        let (nc, nd) = (Nerve::new(c.clone()), Nerve::new(d.clone()));
        for f in enumerate_lax_functors(&c, &d, None, &mut Budget::default()).unwrap() {
            let h = nerve_of_transformation(&LaxTransformation::identity(&f), &nc, &nd).unwrap();
            assert_eq!(h, Homotopy::constant(&nerve_of_lax_functor(&f, &nc, &nd).unwrap()));
        }
    }
}

use std::sync::Arc;

use super::{coherent_at, natural_at, LaxFunctor, LaxTransformation};
use crate::error::Result;
use crate::partition::ClassPartition;
use crate::search::{Budget, Search};
use crate::twocat::{Arrow, Cell, Obj, TwoCat};

/// Which components a lax transformation may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComponentPolicy {
    /// Any 1-cell `F(A) → G(A)`.
    #[default]
    Any,
    /// Only identity 1-cells; requires `F` and `G` to agree on objects.
    Identity,
}

/// Lax functors grouped into classes connected by lax transformations.
pub type LaxClasses = ClassPartition<LaxFunctor, LaxTransformation>;

/// Every normal lax functor `dom → cod`, in canonical order.
///
/// With `objects` set, only functors with that object map are produced.
pub fn enumerate_lax_functors(
    dom: &Arc<TwoCat>,
    cod: &Arc<TwoCat>,
    objects: Option<&[Obj]>,
    budget: &mut Budget,
) -> Result<Vec<LaxFunctor>> {
    let (c, d) = (&**dom, &**cod);
    let (n0, n1, n2) = (c.num_objects(), c.num_arrows(), c.num_cells());
    let mut s = Search::new();

    for o in c.objects() {
        match objects {
            Some(fixed) => s.var(move |_| vec![fixed[o.0].0]),
            None => s.var(move |_| (0..d.num_objects()).collect()),
        };
    }
    let ov = |o: Obj| o.0;
    let av = move |f: Arrow| n0 + f.0;
    let cv = move |a: Cell| n0 + n1 + a.0;
    for f in c.arrows() {
        let (a, b) = (c.src1(f), c.tgt1(f));
        if c.is_id1(f) {
            s.var(move |x| vec![d.id1(Obj(x[ov(a)])).0]);
        } else {
            s.var(move |x| d.arrows_between(Obj(x[ov(a)]), Obj(x[ov(b)])).iter().map(|g| g.0).collect());
        }
    }
    for a in c.cells() {
        let (f, g) = (c.cell_src(a), c.cell_tgt(a));
        if c.is_id2(a) {
            s.var(move |x| vec![d.id2(Arrow(x[av(f)])).0]);
        } else {
            s.var(move |x| d.cells_between(Arrow(x[av(f)]), Arrow(x[av(g)])).iter().map(|c| c.0).collect());
        }
    }
    let mut pair_var = vec![usize::MAX; n1 * n1];
    for f in c.arrows() {
        for g in c.arrows_from(c.tgt1(f)) {
            let gf = c.comp1(f, g).unwrap();
            let v = if c.is_id1(f) || c.is_id1(g) {
                s.var(move |x| vec![d.id2(Arrow(x[av(gf)])).0])
            } else {
                s.var(move |x| {
                    let tgt = d.comp1(Arrow(x[av(f)]), Arrow(x[av(g)])).unwrap();
                    d.cells_between(Arrow(x[av(gf)]), tgt).iter().map(|c| c.0).collect()
                })
            };
            pair_var[f.0 * n1 + g.0] = v;
        }
    }
    debug_assert_eq!(s.len(), n0 + n1 + n2 + pair_var.iter().filter(|v| **v != usize::MAX).count());
    let pv = {
        let pair_var = pair_var.clone();
        move |f: Arrow, g: Arrow| pair_var[f.0 * n1 + g.0]
    };

    for a in c.cells() {
        for b in c.cells_from(c.cell_tgt(a)) {
            let ba = c.vcomp(a, b).unwrap();
            let last = cv(a).max(cv(b)).max(cv(ba));
            s.check(last, move |x| d.vcomp(Cell(x[cv(a)]), Cell(x[cv(b)])) == Some(Cell(x[cv(ba)])));
        }
    }
    for a in c.cells() {
        for b in c.cells_over_from(c.tgt1(c.cell_src(a))) {
            let ba = c.hcomp(a, b).unwrap();
            let (f, f2) = (c.cell_src(a), c.cell_tgt(a));
            let (g, g2) = (c.cell_src(b), c.cell_tgt(b));
            let (p, q) = (pv(f, g), pv(f2, g2));
            s.check(p.max(q), move |x| {
                let lhs = d.vcomp(Cell(x[cv(ba)]), Cell(x[q]));
                let rhs = d.vcomp(Cell(x[p]), d.hcomp(Cell(x[cv(a)]), Cell(x[cv(b)])).unwrap());
                lhs == rhs
            });
        }
    }
    for f in c.arrows() {
        for g in c.arrows_from(c.tgt1(f)) {
            for h in c.arrows_from(c.tgt1(g)) {
                let gf = c.comp1(f, g).unwrap();
                let hg = c.comp1(g, h).unwrap();
                let (p, q, r, t) = (pv(f, g), pv(gf, h), pv(g, h), pv(f, hg));
                s.check(p.max(q).max(r).max(t), move |x| {
                    let lhs = d.vcomp(Cell(x[q]), d.whisker_post(Cell(x[p]), Arrow(x[av(h)])).unwrap());
                    let rhs = d.vcomp(Cell(x[t]), d.whisker_pre(Arrow(x[av(f)]), Cell(x[r])).unwrap());
                    lhs.is_some() && lhs == rhs
                });
            }
        }
    }

    let solutions = s.all(budget)?;
    Ok(solutions
        .into_iter()
        .map(|x| {
            let mut sigma = vec![None; n1 * n1];
            for (slot, &v) in sigma.iter_mut().zip(&pair_var) {
                if v != usize::MAX {
                    *slot = Some(Cell(x[v]));
                }
            }
            LaxFunctor::from_parts_unchecked(
                dom.clone(),
                cod.clone(),
                x[..n0].iter().map(|&v| Obj(v)).collect(),
                x[n0..n0 + n1].iter().map(|&v| Arrow(v)).collect(),
                x[n0 + n1..n0 + n1 + n2].iter().map(|&v| Cell(v)).collect(),
                sigma,
            )
        })
        .collect())
}

fn transformation_search<'a>(f: &'a LaxFunctor, g: &'a LaxFunctor, policy: ComponentPolicy) -> Search<'a> {
    let (c, d) = (&**f.dom(), &**f.cod());
    let n0 = c.num_objects();
    let mut s = Search::new();
    for o in c.objects() {
        let (x, y) = (f.object(o), g.object(o));
        let options: Vec<usize> = match policy {
            ComponentPolicy::Any => d.arrows_between(x, y).iter().map(|a| a.0).collect(),
            ComponentPolicy::Identity if x == y => vec![d.id1(x).0],
            ComponentPolicy::Identity => Vec::new(),
        };
        s.var(move |_| options.clone());
    }
    for a in c.arrows() {
        let (src, tgt) = (c.src1(a), c.tgt1(a));
        if c.is_id1(a) {
            s.var(move |x| vec![d.id2(Arrow(x[src.0])).0]);
        } else {
            s.var(move |x| {
                let from = d.comp1(f.arrow(a), Arrow(x[tgt.0])).unwrap();
                let to = d.comp1(Arrow(x[src.0]), g.arrow(a)).unwrap();
                d.cells_between(from, to).iter().map(|c| c.0).collect()
            });
        }
    }
    let split = move |x: &[usize]| -> (Vec<Arrow>, Vec<Cell>) {
        let comps = x[..n0].iter().map(|&v| Arrow(v)).collect();
        let mut st = vec![Cell(0); c.num_arrows()];
        for (i, &v) in x[n0..].iter().enumerate() {
            st[i] = Cell(v);
        }
        (comps, st)
    };
    let sv = move |a: Arrow| n0 + a.0;
    for beta in c.cells() {
        let last = sv(c.cell_src(beta)).max(sv(c.cell_tgt(beta)));
        s.check(last, move |x| {
            let (comps, st) = split(x);
            natural_at(f, g, &comps, &st, beta)
        });
    }
    for a in c.arrows() {
        for b in c.arrows_from(c.tgt1(a)) {
            let last = sv(a).max(sv(b)).max(sv(c.comp1(a, b).unwrap()));
            s.check(last, move |x| {
                let (comps, st) = split(x);
                coherent_at(f, g, &comps, &st, a, b)
            });
        }
    }
    s
}

fn to_transformation(f: &LaxFunctor, g: &LaxFunctor, x: &[usize]) -> LaxTransformation {
    let n0 = f.dom().num_objects();
    LaxTransformation::from_parts_unchecked(
        f,
        g,
        x[..n0].iter().map(|&v| Arrow(v)).collect(),
        x[n0..].iter().map(|&v| Cell(v)).collect(),
    )
}

/// Every lax transformation `f ⇒ g` allowed by `policy`, in canonical order.
pub fn enumerate_lax_transformations(
    f: &LaxFunctor,
    g: &LaxFunctor,
    policy: ComponentPolicy,
    budget: &mut Budget,
) -> Result<Vec<LaxTransformation>> {
    let s = transformation_search(f, g, policy);
    Ok(s.all(budget)?.iter().map(|x| to_transformation(f, g, x)).collect())
}

/// The first lax transformation `f ⇒ g` in canonical order, if any.
pub fn find_lax_transformation(
    f: &LaxFunctor,
    g: &LaxFunctor,
    policy: ComponentPolicy,
    budget: &mut Budget,
) -> Result<Option<LaxTransformation>> {
    let s = transformation_search(f, g, policy);
    Ok(s.first(budget)?.map(|x| to_transformation(f, g, &x)))
}

/// Classes of `functors` under the equivalence relation generated by lax
/// transformations, each merge recorded with its witness. Functors are put
/// in canonical order first, so the classes do not depend on input order.
pub fn pi0_lax(mut functors: Vec<LaxFunctor>, policy: ComponentPolicy, budget: &mut Budget) -> Result<LaxClasses> {
    functors.sort_by_cached_key(LaxFunctor::canonical_key);
    ClassPartition::build(functors, |f, g| find_lax_transformation(f, g, policy, budget))
}

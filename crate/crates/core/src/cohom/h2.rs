use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{automorphism_two_groupoid, GroupFamily};
use crate::error::{Error, Result};
use crate::format::SigmaEntry;
use crate::laxfun::{enumerate_lax_functors, pi0_lax, ComponentPolicy, LaxClasses, LaxFunctor};
use crate::nerve::{nerve_of_lax_functor, nerve_of_transformation, reconstruct_lax_functor, Nerve};
use crate::search::Budget;
use crate::simpl::{homotopy_classes, homotopy_classes_over, MapClasses};
use crate::twocat::{from_category, Category, Obj, TwoCat};

/// The Dedecker data of a lax functor into `Aut(K)`: the action on arrows
/// and the factor set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub action: BTreeMap<String, String>,
    pub factor_set: Vec<SigmaEntry>,
}

impl Cocycle {
    pub fn of(f: &LaxFunctor) -> Self {
        let (c, d) = (&**f.dom(), &**f.cod());
        let action = c
            .arrows()
            .filter(|&a| !c.is_id1(a))
            .map(|a| (c.arrow_name(a).to_string(), d.arrow_name(f.arrow(a)).to_string()))
            .collect();
        let mut factor_set = Vec::new();
        for a in c.arrows().filter(|&a| !c.is_id1(a)) {
            for b in c.arrows_from(c.tgt1(a)).filter(|&b| !c.is_id1(b)) {
                factor_set.push(SigmaEntry {
                    f: c.arrow_name(a).into(),
                    g: c.arrow_name(b).into(),
                    two_cell: d.cell_name(f.sigma(a, b)).into(),
                });
            }
        }
        Self { action, factor_set }
    }
}

/// The second cohomology set: identity-on-objects lax functors `G → Aut(K)`
/// up to lax transformation.
#[derive(Debug, Clone)]
pub struct H2 {
    pub dom: Arc<TwoCat>,
    pub cod: Arc<TwoCat>,
    pub classes: LaxClasses,
}

impl H2 {
    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    /// One cocycle per class, from the class representative.
    pub fn representatives(&self) -> Vec<Cocycle> {
        (0..self.num_classes()).map(|c| Cocycle::of(self.classes.representative(c))).collect()
    }
}

fn setup(g: &Category, k: &GroupFamily) -> Result<(Arc<TwoCat>, Arc<TwoCat>, Vec<Obj>)> {
    if !g.is_groupoid() {
        return Err(Error::NotGroupoid("the base category has non-invertible arrows".into()));
    }
    if !g.objects().iter().map(String::as_str).eq(k.base()) {
        return Err(Error::Mismatch("the family is not indexed by the objects of the groupoid".into()));
    }
    let dom = Arc::new(from_category(g));
    let cod = Arc::new(automorphism_two_groupoid(k));
    let objects = dom.objects().map(|o| cod.find_obj(dom.obj_name(o)).expect("family base matches")).collect();
    Ok((dom, cod, objects))
}

/// `H²(G, K)` by exhaustive enumeration.
pub fn h2(g: &Category, k: &GroupFamily, policy: ComponentPolicy, budget: &mut Budget) -> Result<H2> {
    let (dom, cod, objects) = setup(g, k)?;
    let functors = enumerate_lax_functors(&dom, &cod, Some(&objects), budget)?;
    let classes = pi0_lax(functors, policy, budget)?;
    Ok(H2 { dom, cod, classes })
}

/// Outcome of comparing `H²(G, K)` with homotopy classes of simplicial maps
/// `ner(G) → ner(Aut K)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub lax_functors: usize,
    pub h2_classes: usize,
    pub simplicial_maps: usize,
    pub homotopy_classes: usize,
    /// Homotopy classes of maps that are the identity on vertices.
    pub vertex_constrained_classes: usize,
    /// `table[i]` is the homotopy class of the nerve of the i-th H² class.
    pub table: Vec<usize>,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl RepresentationReport {
    pub fn passed(&self) -> bool {
        self.well_defined && self.injective && self.surjective && self.h2_classes == self.homotopy_classes
    }

    /// Whether counting all maps and counting vertex-preserving maps
    /// disagree.
    pub fn discrepancy(&self) -> bool {
        self.homotopy_classes != self.vertex_constrained_classes
    }

    pub fn summary(&self) -> String {
        format!(
            "classes: {}, homotopy classes: {}, bijection: {}",
            self.h2_classes,
            self.homotopy_classes,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Builds both sides and checks that `[F] ↦ [ner F]` is a well-defined
/// bijection.
pub fn representation_check(g: &Category, k: &GroupFamily, budget: &mut Budget) -> Result<RepresentationReport> {
    let (dom, cod, objects) = setup(g, k)?;
    let functors = enumerate_lax_functors(&dom, &cod, Some(&objects), budget)?;
    let lax = pi0_lax(functors, ComponentPolicy::Any, budget)?;
    let (nd, nc) = (Nerve::new(dom.clone()), Nerve::new(cod.clone()));
    let homotopic: MapClasses = homotopy_classes(nd.sset(), nc.sset(), budget)?;
    let vertices: Vec<usize> = objects.iter().map(|o| o.0).collect();
    let constrained = homotopy_classes_over(nd.sset(), nc.sset(), Some(&vertices), budget)?;

    let map_class = |f: &LaxFunctor| -> Result<Option<usize>> {
        let m = nerve_of_lax_functor(f, &nd, &nc)?;
        Ok(homotopic.items.iter().position(|x| *x == m).map(|i| homotopic.class_of(i)))
    };
    let mut image = Vec::with_capacity(lax.items.len());
    for f in &lax.items {
        image.push(map_class(f)?);
    }
    let table: Vec<usize> = (0..lax.num_classes())
        .map(|c| image[lax.classes[c][0]].unwrap_or(usize::MAX))
        .collect();

    let mut well_defined = image.iter().all(Option::is_some);
    for (c, members) in lax.classes.iter().enumerate() {
        well_defined &= members.iter().all(|&i| image[i] == Some(table[c]));
    }
    for w in &lax.witnesses {
        let h = nerve_of_transformation(&w.witness, &nd, &nc)?;
        let (p, q) = (h.p(), h.q());
        let cls = |m| homotopic.items.iter().position(|x| x == m).map(|i| homotopic.class_of(i));
        well_defined &= cls(p).is_some() && cls(p) == cls(q);
    }

    let mut hit = table.clone();
    hit.sort_unstable();
    hit.dedup();
    let injective = hit.len() == table.len();

    let mut surjective = true;
    for class in &homotopic.classes {
        let reached = class.iter().any(|&i| {
            reconstruct_lax_functor(&homotopic.items[i], &nd, &nc)
                .ok()
                .and_then(|f| lax.items.iter().position(|x| *x == f))
                .is_some_and(|j| image[j] == Some(homotopic.class_of(i)))
        });
        surjective &= reached;
    }

    Ok(RepresentationReport {
        lax_functors: lax.items.len(),
        h2_classes: lax.num_classes(),
        simplicial_maps: homotopic.items.len(),
        homotopy_classes: homotopic.num_classes(),
        vertex_constrained_classes: constrained.num_classes(),
        table,
        well_defined,
        injective,
        surjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::FiniteGroup;

    fn family(k: FiniteGroup) -> GroupFamily {
        GroupFamily::single(k)
    }

    #[test]
    fn trivial_base_has_one_class() {
        for k in [FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)] {
            let r = representation_check(&Category::terminal(), &family(k), &mut Budget::default()).unwrap();
            assert_eq!((r.h2_classes, r.homotopy_classes), (1, 1));
            assert!(r.passed());
        }
    }

    #[test]
    fn z2_coefficients_in_z3_and_z2() {
        for n in [3, 2] {
            let r = representation_check(&Category::cyclic_group(2), &family(FiniteGroup::cyclic(n)), &mut Budget::default())
                .unwrap();
            assert_eq!(r.summary(), "classes: 2, homotopy classes: 2, bijection: PASS");
            assert!(!r.discrepancy());
        }
    }

    #[test]
    fn identity_components_give_the_same_count() {
        let k = family(FiniteGroup::cyclic(3));
        let g = Category::cyclic_group(2);
        let any = h2(&g, &k, ComponentPolicy::Any, &mut Budget::default()).unwrap();
        let ids = h2(&g, &k, ComponentPolicy::Identity, &mut Budget::default()).unwrap();
        assert_eq!(any.num_classes(), 2);
        assert_eq!(ids.num_classes(), 2);
        let reps = any.representatives();
        assert_eq!(reps[0].action["1"], "*>*:0,1,2");
        assert_eq!(reps[1].action["1"], "*>*:0,2,1");
    }

    #[test]
    fn base_mismatch_and_non_groupoids_are_rejected() {
        let k = GroupFamily::new([("x".to_string(), FiniteGroup::cyclic(2))].into());
        assert!(matches!(
            h2(&Category::cyclic_group(2), &k, ComponentPolicy::Any, &mut Budget::default()),
            Err(Error::Mismatch(_))
        ));
        let k = family(FiniteGroup::cyclic(2));
        let two = GroupFamily::new([("0".into(), FiniteGroup::cyclic(2)), ("1".into(), FiniteGroup::cyclic(2))].into());
        assert!(matches!(
            h2(&Category::ordinal(1), &two, ComponentPolicy::Any, &mut Budget::default()),
            Err(Error::NotGroupoid(_))
        ));
        assert!(matches!(
            h2(&Category::cyclic_group(2), &k, ComponentPolicy::Any, &mut Budget::limited(3)),
            Err(Error::SearchLimit { limit: 3 })
        ));
    }
}

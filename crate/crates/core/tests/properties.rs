use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use geonerve::cohom::{automorphism_two_groupoid, h2, FiniteGroup, GroupFamily};
use geonerve::format::GroupFile;
use geonerve::laxfun::{
    compose_lax_functors, enumerate_lax_functors, enumerate_lax_transformations, pi0_lax, ComponentPolicy,
    LaxFunctor, LaxTransformation,
};
use geonerve::nerve::nerve_of_two_category;
use geonerve::search::Budget;
use geonerve::simpl::{classic_nerve, enumerate_simplicial_maps, spine_map, Homotopy, TruncSSet};
use geonerve::twocat::{delta_two_category, from_category, Category, TwoCat};

fn aut(k: FiniteGroup) -> Arc<TwoCat> {
    Arc::new(automorphism_two_groupoid(&GroupFamily::single(k)))
}

fn small_two_cats() -> Vec<Arc<TwoCat>> {
    vec![
        Arc::new(delta_two_category(0)),
        Arc::new(delta_two_category(1)),
        Arc::new(delta_two_category(2)),
        Arc::new(from_category(&Category::cyclic_group(2))),
        aut(FiniteGroup::cyclic(2)),
        aut(FiniteGroup::cyclic(3)),
    ]
}

/// A random preorder on `n` points, closed under reflexivity and
/// transitivity.
fn preorder() -> impl Strategy<Value = Category> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, bits)| {
            let mut le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * n + j]).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        le[i][j] |= le[i][k] && le[k][j];
                    }
                }
            }
            let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Category::from_preorder(&refs, |i, j| le[i][j], |x, y| format!("{x}>{y}"))
        })
}

fn group_category() -> impl Strategy<Value = Category> {
    prop_oneof![(1usize..=5).prop_map(Category::cyclic_group), preorder()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nerves_satisfy_the_simplicial_identities(c in group_category()) {
        let n = nerve_of_two_category(&Arc::new(from_category(&c)));
        prop_assert!(TruncSSet::validate(&n.to_file()).is_ok());
        let classic = classic_nerve(&c);
        prop_assert!(TruncSSet::validate(&classic.to_file()).is_ok());
    }

    #[test]
    fn nerves_agree_with_classic_nerves(c in group_category()) {
        let ours = nerve_of_two_category(&Arc::new(from_category(&c)));
        let theirs = Arc::new(classic_nerve(&c));
        let rename = |n: usize| -> Vec<usize> { (0..ours.size(n)).map(|x| theirs.find(n, ours.name(n, x)).unwrap()).collect() };
        let m = spine_map(ours.clone(), theirs.clone(), rename(0), rename(1)).unwrap();
        prop_assert!(m.is_bijective());
    }

    #[test]
    fn simplices_are_lax_functors_from_simplices(c in preorder()) {
        let cc = Arc::new(from_category(&c));
        let n = nerve_of_two_category(&cc);
        for k in 0..=3 {
            let count = enumerate_lax_functors(&Arc::new(delta_two_category(k)), &cc, None, &mut Budget::default())
                .unwrap()
                .len();
            prop_assert_eq!(count, n.size(k));
        }
    }

    #[test]
    fn h2_is_invariant_under_renaming(
        which in 0usize..3,
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        object in "[a-z]{1,3}",
    ) {
        let k = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)][which].clone();
        let g = Category::cyclic_group(2);
        let before = h2(&g, &GroupFamily::single(k.clone()), ComponentPolicy::Any, &mut Budget::default()).unwrap();

        let raw = k.to_file();
        let rank: Vec<usize> = perm.iter().copied().filter(|&i| i < k.order()).collect();
        let rename = |s: &String| format!("e{}", rank[raw.elements.iter().position(|e| e == s).unwrap()]);
        let renamed_group = GroupFile {
            elements: raw.elements.iter().map(rename).collect(),
            unit: rename(&raw.unit),
            mult: raw.mult.iter().map(|(a, b, c)| (rename(a), rename(b), rename(c))).collect(),
            inv: None,
        };
        let k2 = FiniteGroup::validate(&renamed_group).unwrap();

        let mut cat = g.to_file();
        let obj = |s: &str| if s == "*" { object.clone() } else { s.to_string() };
        cat.objects = cat.objects.iter().map(|o| obj(o)).collect();
        for a in &mut cat.arrows {
            a.id = format!("x{}", a.id);
            a.src = obj(&a.src);
            a.tgt = obj(&a.tgt);
        }
        cat.identities = cat.identities.iter().map(|(o, a)| (obj(o), format!("x{a}"))).collect();
        for e in &mut cat.comp {
            e.f = format!("x{}", e.f);
            e.g = format!("x{}", e.g);
            e.result = format!("x{}", e.result);
        }
        let g2 = Category::validate(&cat).unwrap();
        let family = GroupFamily::new([(object.clone(), k2)].into());
        let after = h2(&g2, &family, ComponentPolicy::Any, &mut Budget::default()).unwrap();
        prop_assert_eq!(before.num_classes(), after.num_classes());
        prop_assert_eq!(before.classes.sizes(), after.classes.sizes());
    }

    #[test]
    fn pi0_ignores_enumeration_order(
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        k in 2usize..=3,
    ) {
        let c = Arc::new(from_category(&Category::cyclic_group(2)));
        let d = aut(FiniteGroup::cyclic(k));
        let fs = enumerate_lax_functors(&c, &d, None, &mut Budget::default()).unwrap();
        prop_assert_eq!(fs.len(), if k == 3 { 4 } else { 2 });
        let shuffled: Vec<LaxFunctor> = perm.iter().filter(|&&i| i < fs.len()).map(|&i| fs[i].clone()).collect();
        let a = pi0_lax(fs, ComponentPolicy::Any, &mut Budget::default()).unwrap();
        let b = pi0_lax(shuffled, ComponentPolicy::Any, &mut Budget::default()).unwrap();
        let classes = |p: &geonerve::laxfun::LaxClasses| -> BTreeSet<Vec<Vec<usize>>> {
            p.classes.iter().map(|c| {
                let mut keys: Vec<Vec<usize>> = c.iter().map(|&i| p.items[i].canonical_key()).collect();
                keys.sort();
                keys
            }).collect()
        };
        prop_assert_eq!(classes(&a), classes(&b));
        for c in 0..a.num_classes() {
            prop_assert_eq!(a.representative(c), b.representative(c));
        }
    }
}

#[test]
fn simplex_two_categories_have_triangular_counts() {
    for n in 0..=5 {
        let d = delta_two_category(n);
        assert_eq!(d.num_objects(), n + 1);
        assert_eq!(d.num_arrows(), (n + 1) * (n + 2) / 2);
        assert!(d.cells().all(|c| d.is_id2(c)));
        assert!(d.is_two_discrete());
    }
}

#[test]
fn presentations_round_trip() {
    for c in small_two_cats() {
        assert_eq!(TwoCat::validate(&c.to_file()).unwrap(), *c);
        let n = nerve_of_two_category(&c);
        assert_eq!(TruncSSet::validate(&n.to_file()).unwrap(), *n);
    }
    for c in [Category::ordinal(3), Category::cyclic_group(4), Category::terminal()] {
        let again = Category::validate(&c.to_file()).unwrap();
        assert_eq!(from_category(&again), from_category(&c));
        assert_eq!(from_category(&c).underlying_category().unwrap(), c);
    }
}

#[test]
fn enumerated_functors_and_transformations_validate() {
    let cats = small_two_cats();
    for c in &cats[..4] {
        for d in &cats {
            let fs = enumerate_lax_functors(c, d, None, &mut Budget::default()).unwrap();
            for f in &fs {
                assert_eq!(&LaxFunctor::validate(c.clone(), d.clone(), f.data()).unwrap(), f);
            }
            for f in fs.iter().take(6) {
                for g in fs.iter().take(6) {
                    for t in enumerate_lax_transformations(f, g, ComponentPolicy::Any, &mut Budget::default()).unwrap() {
                        assert_eq!(LaxTransformation::validate(f, g, t.data()).unwrap(), t);
                    }
                }
            }
        }
    }
}

#[test]
fn composition_is_associative_and_unital() {
    let z2 = Arc::new(from_category(&Category::cyclic_group(2)));
    let (a2, a3) = (aut(FiniteGroup::cyclic(2)), aut(FiniteGroup::cyclic(3)));
    let d1 = Arc::new(delta_two_category(1));
    let mut budget = Budget::default();
    let fs = enumerate_lax_functors(&d1, &z2, None, &mut budget).unwrap();
    let gs = enumerate_lax_functors(&z2, &a2, None, &mut budget).unwrap();
    let hs = enumerate_lax_functors(&a2, &a3, None, &mut budget).unwrap();
    assert!(!fs.is_empty() && !gs.is_empty() && !hs.is_empty());
    for f in &fs {
        assert_eq!(&compose_lax_functors(&LaxFunctor::identity(z2.clone()), f).unwrap(), f);
        assert_eq!(&compose_lax_functors(f, &LaxFunctor::identity(d1.clone())).unwrap(), f);
        for g in &gs {
            let gf = compose_lax_functors(g, f).unwrap();
            assert!(LaxFunctor::validate(d1.clone(), a2.clone(), gf.data()).is_ok());
            for h in &hs {
                let left = compose_lax_functors(&compose_lax_functors(h, g).unwrap(), f).unwrap();
                let right = compose_lax_functors(h, &gf).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn constant_homotopies_are_valid() {
    let cats = small_two_cats();
    for c in &cats[..4] {
        for d in &cats {
            let (x, y) = (nerve_of_two_category(c), nerve_of_two_category(d));
            for p in enumerate_simplicial_maps(&x, &y, &mut Budget::default()).unwrap() {
                let h = Homotopy::constant(&p);
                assert_eq!(Homotopy::validate(&p, &p, h.data()).unwrap(), h);
            }
        }
    }
}

#[test]
fn maps_are_closed_under_automorphisms_of_the_target() {
    // the inversion automorphism of ℤ/3 induces a strict automorphism of Aut(ℤ/3)
    let c = Arc::new(from_category(&Category::cyclic_group(2)));
    let d = aut(FiniteGroup::cyclic(3));
    let (x, y) = (nerve_of_two_category(&c), nerve_of_two_category(&d));
    let maps = enumerate_simplicial_maps(&x, &y, &mut Budget::default()).unwrap();
    let autos: Vec<_> = enumerate_simplicial_maps(&y, &y, &mut Budget::default())
        .unwrap()
        .into_iter()
        .filter(|m| m.is_bijective())
        .collect();
    assert!(autos.len() > 1);
    for a in &autos {
        for m in &maps {
            let moved = m.then(a).unwrap();
            assert!(maps.contains(&moved));
        }
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use super::{Homotopy, HomotopyData, SimplicialMap, TruncSSet, TOP};
use crate::error::{Error, Result};
use crate::partition::ClassPartition;
use crate::search::{Budget, Search};

/// Simplicial maps grouped into classes connected by homotopies.
pub type MapClasses = ClassPartition<SimplicialMap, Homotopy>;

fn require_coskeletal(y: &TruncSSet) -> Result<()> {
    if y.is_coskeletal() {
        Ok(())
    } else {
        Err(Error::Unsupported("the codomain must be coskeletal so that level 3 is determined".into()))
    }
}

/// Every simplicial map `x → y`, in canonical order (lexicographic in the
/// level 0, 1, 2 tables).
pub fn enumerate_simplicial_maps(x: &Arc<TruncSSet>, y: &Arc<TruncSSet>, budget: &mut Budget) -> Result<Vec<SimplicialMap>> {
    enumerate_simplicial_maps_over(x, y, None, budget)
}

/// As [`enumerate_simplicial_maps`], restricted to maps with the given
/// vertex part when `vertices` is set.
pub fn enumerate_simplicial_maps_over(
    x: &Arc<TruncSSet>,
    y: &Arc<TruncSSet>,
    vertices: Option<&[usize]>,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>> {
    require_coskeletal(y)?;
    let (xs, ys) = (&**x, &**y);
    let offset = [0, xs.size(0), xs.size(0) + xs.size(1)];
    let var = move |n: usize, s: usize| offset[n] + s;
    let mut search = Search::new();
    for v in 0..xs.size(0) {
        match vertices {
            Some(fixed) => search.var(move |_| vec![fixed[v]]),
            None => search.var(move |_| (0..ys.size(0)).collect()),
        };
    }
    for n in 1..TOP {
        for s in 0..xs.size(n) {
            match xs.degeneracy_of(n, s) {
                Some((i, t)) => search.var(move |a| vec![ys.degen(n - 1, i, a[var(n - 1, t)])]),
                None => search.var(move |a| {
                    let faces: Vec<usize> = (0..=n).map(|i| a[var(n - 1, xs.face(n, i, s))]).collect();
                    ys.with_boundary(n, &faces).to_vec()
                }),
            };
        }
    }
    for s in 0..xs.size(TOP) {
        let last = (0..=TOP).map(|i| var(2, xs.face(TOP, i, s))).max().unwrap();
        search.check(last, move |a| {
            let faces: Vec<usize> = (0..=TOP).map(|i| a[var(2, xs.face(TOP, i, s))]).collect();
            !ys.with_boundary(TOP, &faces).is_empty()
        });
    }
    let mut out = Vec::new();
    search.run(budget, |a| {
        let levels = (0..TOP).map(|n| a[offset[n]..offset[n] + xs.size(n)].to_vec()).collect();
        if let Ok(m) = SimplicialMap::validate(x.clone(), y.clone(), levels) {
            out.push(m);
        }
        Ok(true)
    })?;
    Ok(out)
}

struct FaceIndex {
    // (level, face position, face) -> simplices
    by_face: HashMap<(usize, usize, usize), Vec<usize>>,
}

impl FaceIndex {
    fn new(y: &TruncSSet) -> Self {
        let mut by_face: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
        for n in 1..=TOP {
            for z in 0..y.size(n) {
                for a in 0..=n {
                    by_face.entry((n, a, y.face(n, a, z))).or_default().push(z);
                }
            }
        }
        Self { by_face }
    }

    /// Simplices of `Y_n` whose faces agree with the known entries.
    fn matching(&self, y: &TruncSSet, n: usize, known: &[Option<usize>]) -> Vec<usize> {
        let Some((a0, f0)) = known.iter().enumerate().find_map(|(a, f)| f.map(|f| (a, f))) else {
            return (0..y.size(n)).collect();
        };
        self.by_face
            .get(&(n, a0, f0))
            .map(|zs| {
                zs.iter()
                    .copied()
                    .filter(|&z| known.iter().enumerate().all(|(a, f)| f.is_none_or(|f| y.face(n, a, z) == f)))
                    .collect()
            })
            .unwrap_or_default()
    }
}

fn homotopy_search<'a>(p: &'a SimplicialMap, q: &'a SimplicialMap, index: &'a FaceIndex) -> Search<'a> {
    let (xs, ys) = (&**p.dom(), &**p.cod());
    let n0 = xs.size(0);
    let n1 = xs.size(1);
    let var = move |n: usize, j: usize, s: usize| match n {
        0 => s,
        1 => n0 + 2 * s + j,
        _ => n0 + 2 * n1 + 3 * s + j,
    };
    let mut search = Search::new();
    for v in 0..n0 {
        let options = ys.with_boundary(1, &[p.apply(0, v), q.apply(0, v)]).to_vec();
        search.var(move |_| options.clone());
    }
    for n in 1..TOP {
        for s in 0..xs.size(n) {
            for j in 0..=n {
                if let Some((m, t)) = xs.degeneracy_of(n, s) {
                    // s_i h_j = h_{j+1} s_i (i ≤ j), s_i h_j = h_j s_{i-1} (i > j)
                    if m < j {
                        search.var(move |a| vec![ys.degen(n, m, a[var(n - 1, j - 1, t)])]);
                    } else {
                        search.var(move |a| vec![ys.degen(n, m + 1, a[var(n - 1, j, t)])]);
                    }
                    continue;
                }
                search.var(move |a| {
                    let known: Vec<Option<usize>> = (0..=n + 1)
                        .map(|f| {
                            if f == 0 && j == 0 {
                                Some(p.apply(n, s))
                            } else if f == n + 1 && j == n {
                                Some(q.apply(n, s))
                            } else if f < j {
                                Some(a[var(n - 1, j - 1, xs.face(n, f, s))])
                            } else if f == j {
                                Some(ys.face(n + 1, j, a[var(n, j - 1, s)]))
                            } else if f == j + 1 {
                                None
                            } else {
                                Some(a[var(n - 1, j, xs.face(n, f - 1, s))])
                            }
                        })
                        .collect();
                    index.matching(ys, n + 1, &known)
                });
            }
        }
    }
    search
}

fn split_components(p: &SimplicialMap, a: &[usize]) -> HomotopyData {
    let xs = &**p.dom();
    let (n0, n1) = (xs.size(0), xs.size(1));
    let components = vec![
        vec![a[..n0].to_vec()],
        (0..2).map(|j| (0..n1).map(|s| a[n0 + 2 * s + j]).collect()).collect(),
        (0..3).map(|j| (0..xs.size(2)).map(|s| a[n0 + 2 * n1 + 3 * s + j]).collect()).collect(),
    ];
    HomotopyData { components }
}

fn run_homotopies(
    p: &SimplicialMap,
    q: &SimplicialMap,
    budget: &mut Budget,
    stop_at_first: bool,
) -> Result<Vec<Homotopy>> {
    if p.dom() != q.dom() || p.cod() != q.cod() {
        return Err(Error::Mismatch("homotopies need parallel maps".into()));
    }
    require_coskeletal(p.cod())?;
    let index = FaceIndex::new(p.cod());
    let search = homotopy_search(p, q, &index);
    let mut out = Vec::new();
    search.run(budget, |a| {
        if let Ok(h) = Homotopy::validate(p, q, split_components(p, a)) {
            out.push(h);
            return Ok(!stop_at_first);
        }
        Ok(true)
    })?;
    Ok(out)
}

/// The first homotopy `p ⇒ q` in canonical order, if any.
pub fn find_homotopy(p: &SimplicialMap, q: &SimplicialMap, budget: &mut Budget) -> Result<Option<Homotopy>> {
    Ok(run_homotopies(p, q, budget, true)?.into_iter().next())
}

/// Every homotopy `p ⇒ q`, in canonical order.
pub fn enumerate_homotopies(p: &SimplicialMap, q: &SimplicialMap, budget: &mut Budget) -> Result<Vec<Homotopy>> {
    run_homotopies(p, q, budget, false)
}

/// All maps `x → y` up to the equivalence relation generated by homotopy.
pub fn homotopy_classes(x: &Arc<TruncSSet>, y: &Arc<TruncSSet>, budget: &mut Budget) -> Result<MapClasses> {
    homotopy_classes_over(x, y, None, budget)
}

/// As [`homotopy_classes`], over the maps with a fixed vertex part.
pub fn homotopy_classes_over(
    x: &Arc<TruncSSet>,
    y: &Arc<TruncSSet>,
    vertices: Option<&[usize]>,
    budget: &mut Budget,
) -> Result<MapClasses> {
    let maps = enumerate_simplicial_maps_over(x, y, vertices, budget)?;
    ClassPartition::build(maps, |p, q| find_homotopy(p, q, budget))
}

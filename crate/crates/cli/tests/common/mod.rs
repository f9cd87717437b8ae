#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use geonerve::cohom::{automorphism_two_groupoid, FiniteGroup, GroupFamily};
use geonerve::twocat::{delta_two_category, from_category, terminal, Category, TwoCat};

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn geonerve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geonerve"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("GEONERVE_MAX_BRANCHES")
        .output()
        .expect("binary runs")
}

pub fn aut(k: FiniteGroup) -> Arc<TwoCat> {
    Arc::new(automorphism_two_groupoid(&GroupFamily::single(k)))
}

/// `a ≤ b`, `a ≤ c`.
pub fn span() -> Category {
    Category::from_preorder(&["a", "b", "c"], |i, j| i == j || i == 0, |x, y| format!("{x}{y}"))
}

/// The square `[1] × [1]`.
pub fn square() -> Category {
    Category::from_preorder(&["00", "01", "10", "11"], |i, j| i & j == i, |x, y| format!("{x}-{y}"))
}

pub fn categories() -> Vec<(&'static str, Category)> {
    vec![
        ("terminal", Category::terminal()),
        ("[0]", Category::ordinal(0)),
        ("[1]", Category::ordinal(1)),
        ("[2]", Category::ordinal(2)),
        ("[3]", Category::ordinal(3)),
        ("Z/2", Category::cyclic_group(2)),
        ("Z/3", Category::cyclic_group(3)),
        ("span", span()),
        ("square", square()),
    ]
}

pub fn two_categories() -> Vec<(String, Arc<TwoCat>)> {
    let mut out = vec![("terminal".to_string(), Arc::new(terminal()))];
    for n in 0..=3 {
        out.push((format!("delta({n})"), Arc::new(delta_two_category(n))));
    }
    for (name, c) in [
        ("Z/2", Category::cyclic_group(2)),
        ("Z/3", Category::cyclic_group(3)),
        ("span", span()),
        ("square", square()),
    ] {
        out.push((name.to_string(), Arc::new(from_category(&c))));
    }
    out.push(("Aut(Z/2)".into(), aut(FiniteGroup::cyclic(2))));
    out.push(("Aut(Z/3)".into(), aut(FiniteGroup::cyclic(3))));
    out
}

/// Multiplication table of a finite group on `0..n` with unit 0.
pub type Table = Vec<Vec<usize>>;

pub fn cyclic_table(n: usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

pub fn klein_table() -> Table {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

/// S₃ as permutations of three points, listed in a fixed order.
pub fn s3_table() -> Table {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    (0..6)
        .map(|a| (0..6).map(|b| pos(std::array::from_fn(|i| perms[a][perms[b][i]]))).collect())
        .collect()
}

/// Sorted multiset of element orders; distinguishes all groups of order < 8.
pub fn order_profile(t: &Table) -> Vec<usize> {
    let mut out: Vec<usize> = (0..t.len())
        .map(|a| {
            let (mut x, mut k) = (a, 1);
            while x != 0 {
                x = t[x][a];
                k += 1;
            }
            k
        })
        .collect();
    out.sort_unstable();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= i { x + 1 } else { x }).collect();
            q.insert(0, i);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Extensions `K → E → ℤ/2` built from Schreier data: an automorphism `φ`
/// of `K` (the action of the generator) and `c ∈ K` (the factor set on the
/// generator squared), keeping only the data whose product is associative.
/// Returns the distinct order profiles of the groups `E` obtained.
pub fn z2_extension_profiles(k: &Table) -> Vec<Vec<usize>> {
    let n = k.len();
    let autos: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| p[0] == 0 && (0..n).all(|a| (0..n).all(|b| p[k[a][b]] == k[p[a]][p[b]])))
        .collect();
    let mut out = Vec::new();
    for phi in &autos {
        for c in 0..n {
            // elements (x, e) encoded as e * n + x
            let mul = |a: usize, b: usize| {
                let (x, e, y, f) = (a % n, a / n, b % n, b / n);
                match (e, f) {
                    (0, _) => f * n + k[x][y],
                    (1, 0) => n + k[x][phi[y]],
                    _ => k[k[x][phi[y]]][c],
                }
            };
            let m = 2 * n;
            let assoc = (0..m).all(|a| (0..m).all(|b| (0..m).all(|d| mul(mul(a, b), d) == mul(a, mul(b, d)))));
            if assoc {
                let t: Table = (0..m).map(|a| (0..m).map(|b| mul(a, b)).collect()).collect();
                out.push(order_profile(&t));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

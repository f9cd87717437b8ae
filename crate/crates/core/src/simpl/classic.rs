use super::{TruncSSet, TOP};
use crate::twocat::Category;

/// The nerve of a category, truncated at dimension 3: `n`-simplices are
/// strings of `n` composable arrows, named by joining arrow names with `|`.
pub fn classic_nerve(cat: &Category) -> TruncSSet {
    // strings[n] for n ≥ 1: composable arrow strings of length n
    let mut strings: Vec<Vec<Vec<usize>>> = vec![Vec::new(), (0..cat.arrows().len()).map(|a| vec![a]).collect()];
    for n in 2..=TOP {
        let mut next = Vec::new();
        for s in &strings[n - 1] {
            for a in cat.arrows_from(cat.tgt(*s.last().unwrap())) {
                let mut t = s.clone();
                t.push(a);
                next.push(t);
            }
        }
        strings.push(next);
    }
    let name = |s: &[usize]| s.iter().map(|&a| cat.arrows()[a].as_str()).collect::<Vec<_>>().join("|");
    let mut levels = vec![cat.objects().to_vec()];
    for n in 1..=TOP {
        levels.push(strings[n].iter().map(|s| name(s)).collect());
    }
    let vertex = |s: &[usize], i: usize| if i == 0 { cat.src(s[0]) } else { cat.tgt(s[i - 1]) };
    TruncSSet::from_named(
        levels,
        |n, i, x| {
            let s = &strings[n][x];
            if n == 1 {
                return cat.objects()[if i == 0 { cat.tgt(s[0]) } else { cat.src(s[0]) }].clone();
            }
            let mut t = s.clone();
            if i == 0 {
                t.remove(0);
            } else if i == n {
                t.pop();
            } else {
                let c = cat.compose(t[i - 1], t[i]).expect("strings are composable");
                t.splice(i - 1..=i, [c]);
            }
            name(&t)
        },
        |n, i, x| {
            if n == 0 {
                return cat.arrows()[cat.identity(x)].clone();
            }
            let s = &strings[n][x];
            let mut t = s.clone();
            t.insert(i, cat.identity(vertex(s, i)));
            name(&t)
        },
        true,
    )
    .expect("the nerve of a category is a simplicial set")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sizes() {
        assert_eq!(classic_nerve(&Category::terminal()).sizes(), [1, 1, 1, 1]);
        assert_eq!(classic_nerve(&Category::cyclic_group(2)).sizes(), [1, 2, 4, 8]);
        assert_eq!(classic_nerve(&Category::cyclic_group(3)).sizes(), [1, 3, 9, 27]);
        assert_eq!(classic_nerve(&Category::ordinal(2)).sizes(), [3, 6, 10, 15]);
    }
}

use petgraph::unionfind::UnionFind;

use crate::error::Result;

/// A directed edge `from → to` between two items together with the object
/// that proves the connection (a transformation or a homotopy).
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<W> {
    pub from: usize,
    pub to: usize,
    pub witness: W,
}

/// Items split into the connected components of a "there is an arrow in
/// either direction" relation.
///
/// Classes are listed in order of their smallest member; the smallest member
/// is the class representative.
#[derive(Debug, Clone)]
pub struct ClassPartition<T, W> {
    pub items: Vec<T>,
    pub classes: Vec<Vec<usize>>,
    pub witnesses: Vec<Witness<W>>,
}

impl<T, W> ClassPartition<T, W> {
    /// Connects every pair of items for which `connect` finds an arrow in one
    /// direction or the other. Pairs already known to lie in one class are
    /// skipped, so the witnesses form a spanning forest of each class.
    pub fn build(items: Vec<T>, mut connect: impl FnMut(&T, &T) -> Result<Option<W>>) -> Result<Self> {
        let n = items.len();
        let mut uf = UnionFind::<usize>::new(n);
        let mut witnesses = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if uf.equiv(i, j) {
                    continue;
                }
                if let Some(w) = connect(&items[i], &items[j])? {
                    witnesses.push(Witness { from: i, to: j, witness: w });
                    uf.union(i, j);
                } else if let Some(w) = connect(&items[j], &items[i])? {
                    witnesses.push(Witness { from: j, to: i, witness: w });
                    uf.union(i, j);
                }
            }
        }
        let labels = uf.into_labeling();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot_of_label = std::collections::HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            let slot = *slot_of_label.entry(*l).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[slot].push(i);
        }
        Ok(Self {
            items,
            classes,
            witnesses,
        })
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn representative(&self, class: usize) -> &T {
        &self.items[self.classes[class][0]]
    }

    pub fn class_of(&self, item: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&item))
            .expect("every item lies in a class")
    }

    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_mod_three() {
        let p = ClassPartition::build((0..7).collect::<Vec<i32>>(), |a, b| {
            Ok(((b - a) % 3 == 0).then_some(()))
        })
        .unwrap();
        assert_eq!(p.classes, vec![vec![0, 3, 6], vec![1, 4], vec![2, 5]]);
        assert_eq!(p.witnesses.len(), 4);
        assert_eq!(*p.representative(1), 1);
        assert_eq!(p.class_of(5), 2);
    }

    #[test]
    fn one_directional_edges_still_connect() {
        let p = ClassPartition::build(vec![0, 1, 2], |a, b| Ok((*a == 2 && *b == 0).then_some("w"))).unwrap();
        assert_eq!(p.classes, vec![vec![0, 2], vec![1]]);
        assert_eq!(p.witnesses[0].from, 2);
        assert_eq!(p.witnesses[0].to, 0);
    }
}

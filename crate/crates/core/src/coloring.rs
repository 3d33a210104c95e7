//! Partial and total edge colorings.

use std::collections::BTreeSet;

/// Color index, 1-based.
pub type Color = u32;

/// Per-edge optional color. `None` is the unassigned state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    assignment: Vec<Option<Color>>,
    palette: Color,
}

impl EdgeColoring {
    pub fn empty(edge_count: usize, palette: Color) -> Self {
        EdgeColoring { assignment: vec![None; edge_count], palette }
    }

    pub fn from_assignment(assignment: Vec<Option<Color>>, palette: Color) -> Self {
        EdgeColoring { assignment, palette }
    }

    /// Total coloring from plain colors.
    pub fn from_colors(colors: &[Color], palette: Color) -> Self {
        EdgeColoring { assignment: colors.iter().map(|&c| Some(c)).collect(), palette }
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn set_palette(&mut self, palette: Color) {
        self.palette = palette;
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<Color> {
        self.assignment[e]
    }

    pub fn set(&mut self, e: usize, c: Color) {
        self.assignment[e] = Some(c);
    }

    pub fn clear(&mut self, e: usize) {
        self.assignment[e] = None;
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.assignment
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.assignment.iter().flatten().copied().collect()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.assignment.iter().flatten().copied().max()
    }
}

/// A bijection on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPermutation {
    mapping: Vec<Color>,
}

impl ColorPermutation {
    pub fn identity(n: Color) -> Self {
        ColorPermutation { mapping: (1..=n).collect() }
    }

    /// Sends `fixed[i].0` to `fixed[i].1`; remaining colors are matched in
    /// increasing order. Returns `None` if the requested pairs are not
    /// injective or out of range.
    pub fn sending(n: Color, fixed: &[(Color, Color)]) -> Option<Self> {
        let mut mapping = vec![0; n as usize];
        let mut taken = vec![false; n as usize + 1];
        for &(from, to) in fixed {
            if from == 0 || from > n || to == 0 || to > n {
                return None;
            }
            let slot = &mut mapping[from as usize - 1];
            if *slot != 0 && *slot != to {
                return None;
            }
            if *slot == 0 {
                if taken[to as usize] {
                    return None;
                }
                *slot = to;
                taken[to as usize] = true;
            }
        }
        let mut free = (1..=n).filter(|&c| !taken[c as usize]);
        for slot in mapping.iter_mut().filter(|s| **s == 0) {
            *slot = free.next()?;
        }
        Some(ColorPermutation { mapping })
    }

    pub fn apply(&self, c: Color) -> Color {
        self.mapping[c as usize - 1]
    }

    pub fn apply_to(&self, coloring: &EdgeColoring) -> EdgeColoring {
        let assignment = coloring.assignment().iter().map(|c| c.map(|c| self.apply(c))).collect();
        EdgeColoring::from_assignment(assignment, coloring.palette())
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.mapping.len() + 1];
        self.mapping.iter().all(|&c| {
            let ok = c >= 1 && (c as usize) <= self.mapping.len() && !seen[c as usize];
            if ok {
                seen[c as usize] = true;
            }
            ok
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_fills_remaining_colors_in_order() {
        let p = ColorPermutation::sending(6, &[(4, 1), (1, 2), (6, 3)]).unwrap();
        assert!(p.is_bijection());
        assert_eq!((1..=6).map(|c| p.apply(c)).collect::<Vec<_>>(), vec![2, 4, 5, 1, 6, 3]);
        assert!(ColorPermutation::sending(6, &[(1, 2), (3, 2)]).is_none());
        assert!(ColorPermutation::sending(6, &[(7, 1)]).is_none());
    }

    #[test]
    fn counts_colors() {
        let mut c = EdgeColoring::empty(4, 5);
        c.set(0, 3);
        c.set(2, 3);
        c.set(3, 5);
        assert_eq!(c.colors_used(), 2);
        assert!(!c.is_total());
        assert_eq!(c.max_color(), Some(5));
    }
}

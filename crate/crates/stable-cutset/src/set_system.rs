//! Set systems: the shared input type of the Hitting Set, Multicolored
//! Hitting Set, and Set Splitting solvers and transformations.
//!
//! A system is a ground set `0..n`, a family of subsets (kept as a list —
//! repeated sets are meaningful and preserved), an optional solution-size
//! budget `k`, and an optional total coloring of the elements with colors
//! `1..=k`.

use thiserror::Error;

/// Errors raised while building a [`SetSystem`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetSystemError {
    /// A member set mentions an element outside `0..n`.
    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    /// The coloring must assign a color to every element.
    #[error("coloring has {got} entries but the ground set has {expected}")]
    ColoringWrongLength { expected: usize, got: usize },
    /// Colors must lie in `1..=k`.
    #[error("element {element} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        element: usize,
        color: usize,
        k: usize,
    },
    /// A coloring only makes sense together with a budget `k`.
    #[error("coloring given without a budget k")]
    ColoringWithoutBudget,
}

/// A ground set `0..n` with a family of subsets, an optional budget, and an
/// optional element coloring (total, colors in `1..=k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub n: usize,
    /// Member sets, each sorted and duplicate-free; the family itself may
    /// contain repeats and empty sets.
    pub sets: Vec<Vec<usize>>,
    /// Optional solution-size budget.
    pub k: Option<usize>,
    /// Optional coloring, `coloring[e]` being the color of element `e`.
    pub coloring: Option<Vec<usize>>,
}

impl SetSystem {
    /// Builds and validates a system, normalizing each member set.
    pub fn new(
        n: usize,
        sets: Vec<Vec<usize>>,
        k: Option<usize>,
        coloring: Option<Vec<usize>>,
    ) -> Result<Self, SetSystemError> {
        let mut normalized = Vec::with_capacity(sets.len());
        for set in sets {
            for &e in &set {
                if e >= n {
                    return Err(SetSystemError::ElementOutOfRange { element: e, n });
                }
            }
            let mut set = set;
            set.sort_unstable();
            set.dedup();
            normalized.push(set);
        }
        if let Some(col) = &coloring {
            let k = k.ok_or(SetSystemError::ColoringWithoutBudget)?;
            if col.len() != n {
                return Err(SetSystemError::ColoringWrongLength {
                    expected: n,
                    got: col.len(),
                });
            }
            for (element, &color) in col.iter().enumerate() {
                if color == 0 || color > k {
                    return Err(SetSystemError::ColorOutOfRange { element, color, k });
                }
            }
        }
        Ok(SetSystem {
            n,
            sets: normalized,
            k,
            coloring,
        })
    }

    /// Number of member sets.
    pub fn m(&self) -> usize {
        self.sets.len()
    }

    /// The elements of each color class `1..=k`, ascending within a class.
    /// Empty unless a coloring is present.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let (Some(k), Some(col)) = (self.k, &self.coloring) else {
            return Vec::new();
        };
        let mut classes = vec![Vec::new(); k];
        for (e, &c) in col.iter().enumerate() {
            classes[c - 1].push(e);
        }
        classes
    }

    /// Whether `choice` intersects every member set.
    pub fn hits_all(&self, choice: &[usize]) -> bool {
        let mut chosen = vec![false; self.n];
        for &e in choice {
            chosen[e] = true;
        }
        self.sets
            .iter()
            .all(|set| set.iter().any(|&e| chosen[e]))
    }

    /// Whether `s` splits every member set: no set lies fully inside `s`
    /// nor fully outside it.
    pub fn splits_all(&self, s: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &e in s {
            inside[e] = true;
        }
        self.sets.iter().all(|set| {
            set.iter().any(|&e| inside[e]) && set.iter().any(|&e| !inside[e])
        })
    }
}

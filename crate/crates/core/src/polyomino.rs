//! Bargraph polyominoes of k-bonacci words.
//!
//! Column `c` (0-based) occupies `x ∈ [c, c+1]` and rows `y ∈ [0, height)`.
//! The graph module labels vertices with the same lattice coordinates.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{check_k, Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyomino {
    heights: Vec<u8>,
    k: usize,
}

impl Polyomino {
    /// Builds a polyomino from explicit column heights.
    pub fn new(heights: Vec<u8>, k: usize) -> Result<Self> {
        check_k(k)?;
        if heights.is_empty() {
            return Err(Error::Domain(
                "a polyomino needs at least one column".into(),
            ));
        }
        if heights.iter().any(|&h| h != 1 && h != 2) {
            return Err(Error::Domain(format!(
                "heights must be 1 or 2: {heights:?}"
            )));
        }
        let bits: Vec<u8> = heights.iter().map(|h| h - 1).collect();
        Word::new(bits, k)?;
        Ok(Polyomino { heights, k })
    }

    /// Column `i` gets `w_i + 1` cells.
    pub fn from_word(w: &Word) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::Domain("the empty word has no polyomino".into()));
        }
        Ok(Polyomino {
            heights: w.bits().iter().map(|b| b + 1).collect(),
            k: w.k(),
        })
    }

    pub fn heights(&self) -> &[u8] {
        &self.heights
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    pub fn word(&self) -> Word {
        Word::new(self.heights.iter().map(|h| h - 1).collect(), self.k)
            .expect("heights were validated on construction")
    }

    /// Unit cells as `(column, row)` lower-left corners.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (0..h as i64).map(move |y| (c as i64, y)))
    }

    pub fn area(&self) -> usize {
        self.heights.iter().map(|&h| h as usize).sum()
    }

    /// Half the number of unit boundary edges of the cell union.
    pub fn semiperimeter(&self) -> usize {
        let cells: HashSet<(i64, i64)> = self.cells().collect();
        let boundary: usize = cells
            .iter()
            .map(|&(x, y)| {
                [(1, 0), (-1, 0), (0, 1), (0, -1)]
                    .iter()
                    .filter(|(dx, dy)| !cells.contains(&(x + dx, y + dy)))
                    .count()
            })
            .sum();
        debug_assert!(boundary.is_multiple_of(2));
        boundary / 2
    }

    /// Two text rows of block characters, top row first.
    pub fn render(&self) -> String {
        let top: String = self
            .heights
            .iter()
            .map(|&h| if h == 2 { '█' } else { ' ' })
            .collect();
        let bottom: String = "█".repeat(self.heights.len());
        format!("{}\n{}", top.trim_end(), bottom)
    }

    pub fn to_json(&self) -> PolyominoJson {
        PolyominoJson {
            word: self.word().to_ascii(),
            heights: self.heights.clone(),
            area: self.area(),
            sper: self.semiperimeter(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyominoJson {
    pub word: String,
    pub heights: Vec<u8>,
    pub area: usize,
    pub sper: usize,
}

/// `n + 1 + (number of maximal runs of 1's)`, equal to the geometric
/// semiperimeter of the word's polyomino.
pub fn semiperimeter_closed(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::Domain("the empty word has no polyomino".into()));
    }
    Ok(w.len() + 1 + w.one_runs().len())
}

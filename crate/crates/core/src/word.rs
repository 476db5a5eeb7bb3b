//! Words over the generators of a Coxeter system.

use std::fmt;
use std::ops::Index;

/// A finite sequence of generator indices (0-based, internal numbering).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The concatenation of `k` copies of this word.
    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Rotation moving the first `k` letters to the back.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let mut letters = self.0.clone();
        letters.rotate_left(k % self.0.len());
        Word(letters)
    }

    /// All `|w|` cyclic shifts, starting with the word itself.
    pub fn cyclic_shifts(&self) -> Vec<Word> {
        (0..self.0.len()).map(|k| self.rotate(k)).collect()
    }

    pub fn count(&self, letter: usize) -> usize {
        self.0.iter().filter(|&&x| x == letter).count()
    }

    /// Removes the letters at positions `i` and `j` (`i != j`).
    pub fn without_pair(&self, i: usize, j: usize) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i && p != j)
                .map(|(_, &x)| x)
                .collect(),
        )
    }

    /// Sorted, deduplicated set of letters appearing in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl Index<usize> for Word {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Space-separated internal (0-based) indices; `e` for the empty word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

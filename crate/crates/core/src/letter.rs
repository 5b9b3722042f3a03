//! The 26-way uppercase letter alphabet used everywhere in this crate.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Number of letter classes (`A`..`Z`).
pub const NUM_CLASSES: usize = 26;

/// One of the 26 uppercase Latin letter classes.
///
/// Internally a class index in `0..26`; `0` is `A`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "char", into = "char")]
pub struct LetterClass(u8);

impl LetterClass {
    pub fn from_index(index: usize) -> Option<Self> {
        (index < NUM_CLASSES).then(|| LetterClass(index as u8))
    }

    pub fn from_char(c: char) -> Option<Self> {
        c.is_ascii_uppercase().then(|| LetterClass(c as u8 - b'A'))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'A' + self.0) as char
    }

    /// All 26 classes in alphabetical order.
    pub fn all() -> impl Iterator<Item = LetterClass> {
        (0..NUM_CLASSES as u8).map(LetterClass)
    }
}

impl fmt::Display for LetterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for LetterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LetterClass({})", self.to_char())
    }
}

impl TryFrom<char> for LetterClass {
    type Error = String;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        LetterClass::from_char(c).ok_or_else(|| format!("not an uppercase letter: {c:?}"))
    }
}

impl From<LetterClass> for char {
    fn from(l: LetterClass) -> char {
        l.to_char()
    }
}

impl FromStr for LetterClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => LetterClass::try_from(c),
            _ => Err(format!("expected a single letter, got {s:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_all_letters() {
        for (i, l) in LetterClass::all().enumerate() {
            assert_eq!(l.index(), i);
            assert_eq!(LetterClass::from_char(l.to_char()), Some(l));
            assert_eq!(l.to_string().parse::<LetterClass>(), Ok(l));
        }
        assert_eq!(LetterClass::all().count(), NUM_CLASSES);
    }

    #[test]
    fn rejects_non_letters() {
        assert!(LetterClass::from_char('a').is_none());
        assert!(LetterClass::from_char('0').is_none());
        assert!(LetterClass::from_index(26).is_none());
        assert!("AB".parse::<LetterClass>().is_err());
    }
}

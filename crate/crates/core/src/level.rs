//! Half-integer levels ½, 1, 3/2, ... of towers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A level t ∈ ½ℤ, stored as 2t.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Level(u32);

impl Level {
    pub const HALF: Level = Level(1);

    pub const fn from_twice(t2: u32) -> Self {
        Level(t2)
    }

    pub const fn integer(k: u32) -> Self {
        Level(2 * k)
    }

    pub const fn half(k: u32) -> Self {
        Level(2 * k + 1)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// k for both k and k+½.
    pub fn floor(self) -> u32 {
        self.0 / 2
    }

    pub fn ceil(self) -> u32 {
        self.0.div_ceil(2)
    }

    /// Diagram size of the monoid at this level (I_{k+½} ⊂ I_{k+1}).
    pub fn diagram_size(self) -> usize {
        self.ceil() as usize
    }

    pub fn next(self) -> Self {
        Level(self.0 + 1)
    }

    pub fn prev(self) -> Option<Self> {
        (self.0 > 1).then(|| Level(self.0 - 1))
    }

    /// ½, 1, ..., self.
    pub fn up_to(self) -> impl Iterator<Item = Level> {
        (1..=self.0).map(Level)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a level: {s:?}"));
        if let Some(num) = s.strip_suffix("/2") {
            let n: u32 = num.parse().map_err(|_| bad())?;
            return Ok(Level(n));
        }
        if let Some(base) = s.strip_suffix(".5") {
            let k: u32 = base.parse().map_err(|_| bad())?;
            return Ok(Level(2 * k + 1));
        }
        let k: u32 = s.parse().map_err(|_| bad())?;
        Ok(Level(2 * k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print() {
        for s in ["1/2", "3", "5/2"] {
            assert_eq!(s.parse::<Level>().unwrap().to_string(), s);
        }
        assert_eq!("2.5".parse::<Level>().unwrap(), Level::half(2));
        assert_eq!("4/2".parse::<Level>().unwrap(), Level::integer(2));
        assert!("x".parse::<Level>().is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(Level::HALF.diagram_size(), 1);
        assert_eq!(Level::half(2).diagram_size(), 3);
        assert_eq!(Level::integer(2).diagram_size(), 2);
        assert_eq!(Level::half(1).up_to().count(), 3);
    }
}

//! Binary-addition-tree enumeration of arc-state vectors.
//!
//! A cursor walks all `2^w` width-`w` binary vectors by repeatedly adding
//! `(1, 0, ..., 0)` to a single in-place vector, coordinate 1 least
//! significant. The stream starts at the all-zero vector and ends after
//! the all-one vector; memory stays one vector regardless of width.

use crate::error::{Error, Result};

/// Resumable enumeration cursor over width-`w` binary state vectors.
#[derive(Debug, Clone)]
pub struct BatCursor {
    current: Vec<bool>,
    exhausted: bool,
}

impl BatCursor {
    /// Positions a new cursor at the all-zero vector, the first emission.
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        Ok(Self {
            current: vec![false; width],
            exhausted: false,
        })
    }

    pub fn width(&self) -> usize {
        self.current.len()
    }

    /// The vector the cursor currently points at.
    pub fn current(&self) -> &[bool] {
        &self.current
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Advances to the next vector by binary addition and returns it, or
    /// `None` once the all-one vector has already been emitted. Exhaustion
    /// is a normal return, not an error.
    pub fn advance(&mut self) -> Option<&[bool]> {
        if self.exhausted {
            return None;
        }
        // Add (1, 0, ..., 0): flip coordinate 1 if clear, otherwise zero the
        // leading run of ones and set the coordinate after it.
        if !self.current[0] {
            self.current[0] = true;
            return Some(&self.current);
        }
        let mut i = 0;
        while i < self.current.len() && self.current[i] {
            i += 1;
        }
        if i == self.current.len() {
            self.exhausted = true;
            return None;
        }
        for slot in &mut self.current[..i] {
            *slot = false;
        }
        self.current[i] = true;
        Some(&self.current)
    }
}

/// Iterator over owned copies of every vector, in enumeration order.
/// Convenient for tests; hot paths drive a [`BatCursor`] directly.
pub fn enumerate(width: usize) -> Result<impl Iterator<Item = Vec<bool>>> {
    let cursor = BatCursor::new(width)?;
    Ok(Enumerate {
        cursor,
        started: false,
    })
}

struct Enumerate {
    cursor: BatCursor,
    started: bool,
}

impl Iterator for Enumerate {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        if !self.started {
            self.started = true;
            return Some(self.cursor.current().to_vec());
        }
        self.cursor.advance().map(<[bool]>::to_vec)
    }
}

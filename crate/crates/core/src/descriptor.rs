//! Text syntax for rings and elements.
//!
//! Rings: `Z`, `Z/6`, `M2(Z)`, `M2(Z/4)`, `Z/2 x Z/3`. Whitespace is
//! ignored and `x` binds looser than `Mk(..)`; products associate to the left.
//!
//! Elements: decimal integers (any size, optionally signed), tuples
//! `(a, b)` for product rings and row-major matrices `[[a,b],[c,d]]`.
//! An integer literal given for a composite ring is its image under `Z -> R`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingKind};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            src,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// 1-based column of the next significant character.
    fn column(&mut self) -> usize {
        self.skip_ws();
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i + 1)
            .unwrap_or(self.chars.len() + 1)
    }

    fn error<T>(&mut self, message: impl Into<String>) -> Result<T> {
        let position = self.column();
        Err(Error::Parse {
            position,
            message: format!("{} in {:?}", message.into(), self.src),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        Ok(self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect())
    }

    fn uint(&mut self) -> Result<u64> {
        let col = self.column();
        let s = self.digits()?;
        s.parse().map_err(|_| Error::Parse {
            position: col,
            message: format!("number {s} out of range in {:?}", self.src),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let s = self.digits()?;
        let v: BigInt = s.parse().expect("digit string parses");
        Ok(if negative { -v } else { v })
    }

    fn ring(&mut self) -> Result<Ring> {
        let mut acc = self.ring_factor()?;
        while self.eat('x') {
            let rhs = self.ring_factor()?;
            acc = Ring::product(acc, rhs);
        }
        Ok(acc)
    }

    fn ring_factor(&mut self) -> Result<Ring> {
        let col = self.column();
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                if self.eat('/') {
                    let n = self.uint()?;
                    Ring::modular(n).map_err(|e| Error::Parse {
                        position: col,
                        message: e.to_string(),
                    })
                } else {
                    Ok(Ring::integers())
                }
            }
            Some('M') => {
                self.pos += 1;
                let k = self.uint()?;
                self.expect('(')?;
                let base = self.ring()?;
                self.expect(')')?;
                Ring::matrix(base, k as usize).map_err(|e| Error::Parse {
                    position: col,
                    message: e.to_string(),
                })
            }
            Some('(') => {
                self.pos += 1;
                let r = self.ring()?;
                self.expect(')')?;
                Ok(r)
            }
            Some(c) => self.error(format!("expected 'Z', 'M' or '(', found '{c}'")),
            None => self.error("expected a ring, found end of input"),
        }
    }

    fn element(&mut self, ring: &Ring) -> Result<Elem> {
        match self.peek() {
            Some(c) if c == '-' || c == '+' || c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(ring.from_int(&v))
            }
            Some('(') => match ring.kind() {
                RingKind::Product(l, r) => {
                    self.pos += 1;
                    let a = self.element(l)?;
                    self.expect(',')?;
                    let b = self.element(r)?;
                    self.expect(')')?;
                    Ok(Elem::pair(a, b))
                }
                _ => self.error(format!("tuple literal given for non-product ring {ring}")),
            },
            Some('[') => match ring.kind() {
                RingKind::Matrix(base, k) => {
                    let k = *k;
                    self.pos += 1;
                    let mut entries = Vec::with_capacity(k * k);
                    for i in 0..k {
                        if i > 0 {
                            self.expect(',')?;
                        }
                        self.expect('[')?;
                        for j in 0..k {
                            if j > 0 {
                                self.expect(',')?;
                            }
                            entries.push(self.element(base)?);
                        }
                        self.expect(']')?;
                    }
                    self.expect(']')?;
                    Ok(Elem::Mat(entries))
                }
                _ => self.error(format!("matrix literal given for non-matrix ring {ring}")),
            },
            Some(c) => self.error(format!("unexpected '{c}' in element literal")),
            None => self.error("expected an element, found end of input"),
        }
    }
}

/// Parse a ring descriptor such as `M2(Z/4)` or `Z/2 x Z/3`.
pub fn parse_ring(src: &str) -> Result<Ring> {
    let mut c = Cursor::new(src);
    let r = c.ring()?;
    c.finish()?;
    Ok(r)
}

/// Parse an element literal of `ring`.
pub fn parse_element(ring: &Ring, src: &str) -> Result<Elem> {
    let mut c = Cursor::new(src);
    let e = c.element(ring)?;
    c.finish()?;
    Ok(e)
}

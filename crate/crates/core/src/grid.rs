//! Inclusive one-dimensional parameter grids written as `start:stop:count`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::argument("grid count must be at least 1"));
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err(Error::argument("grid bounds must be finite"));
        }
        if start > stop {
            return Err(Error::argument(format!("grid start {start} exceeds stop {stop}")));
        }
        if count == 1 && start != stop {
            return Err(Error::argument("a one-point grid needs start == stop"));
        }
        Ok(Grid { start, stop, count })
    }

    pub fn point(value: f64) -> Result<Self> {
        Grid::new(value, value, 1)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Evenly spaced values; the last one is exactly `stop`.
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| -> Result<f64> {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::argument(format!("bad number {t:?} in grid {s:?}")))
        };
        match parts.as_slice() {
            [v] => Grid::point(num(v)?),
            [a, b, n] => {
                let count = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::argument(format!("bad count {n:?} in grid {s:?}")))?;
                Grid::new(num(a)?, num(b)?, count)
            }
            _ => Err(Error::argument(format!("grid {s:?} is not VALUE or START:STOP:COUNT"))),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count == 1 {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}:{}:{}", self.start, self.stop, self.count)
        }
    }
}

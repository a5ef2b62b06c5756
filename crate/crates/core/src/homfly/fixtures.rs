//! Named HOMFLY polynomials read from a plain-text table.
//!
//! Each block is a name line followed by `e_v e_z coeff` lines; `#` starts a
//! comment and blank lines are ignored.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{HomflyError, HomflyResult};
use crate::arith::LaurentPoly2;

pub const BUNDLED_FIXTURES: &str = include_str!("../../data/fixtures.txt");

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Fixtures {
    knots: BTreeMap<String, LaurentPoly2>,
}

/// How a computed polynomial relates to a fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureMatch {
    Same,
    Mirror,
    Different,
}

impl FixtureMatch {
    pub fn matches(self) -> bool {
        self != FixtureMatch::Different
    }
}

impl Fixtures {
    pub fn bundled() -> Self {
        BUNDLED_FIXTURES.parse().expect("bundled fixtures parse")
    }

    pub fn get(&self, name: &str) -> Option<&LaurentPoly2> {
        self.knots.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.knots.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    pub fn compare(&self, polynomial: &LaurentPoly2, name: &str) -> Result<FixtureMatch, HomflyError> {
        let fixture = self.get(name).ok_or_else(|| HomflyError::UnknownFixture(name.to_string()))?;
        Ok(if fixture == polynomial {
            FixtureMatch::Same
        } else if &fixture.mirror() == polynomial {
            FixtureMatch::Mirror
        } else {
            FixtureMatch::Different
        })
    }
}

impl FromStr for Fixtures {
    type Err = HomflyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut knots = BTreeMap::new();
        let mut current: Option<(String, LaurentPoly2)> = None;
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let term = (fields.len() == 3)
                .then(|| {
                    Some((
                        fields[0].parse::<i64>().ok()?,
                        fields[1].parse::<i64>().ok()?,
                        fields[2].parse::<BigInt>().ok()?,
                    ))
                })
                .flatten();
            match (term, current.as_mut()) {
                (Some((ev, ez, c)), Some((_, poly))) => poly.add_term(ev, ez, c),
                (Some(_), None) => {
                    return Err(HomflyError::FixtureParse { line: lineno + 1, message: "term before any name".into() })
                }
                (None, _) => {
                    if fields.len() != 1 {
                        return Err(HomflyError::FixtureParse {
                            line: lineno + 1,
                            message: format!("bad line {line:?}"),
                        });
                    }
                    if let Some((name, poly)) = current.take() {
                        knots.insert(name, poly);
                    }
                    current = Some((line.to_string(), LaurentPoly2::zero()));
                }
            }
        }
        if let Some((name, poly)) = current {
            knots.insert(name, poly);
        }
        Ok(Fixtures { knots })
    }
}

/// `true` iff the result equals the named fixture or its mirror image.
pub fn compare_fixture(result: &HomflyResult, fixtures: &Fixtures, name: &str) -> Result<bool, HomflyError> {
    Ok(fixtures.compare(&result.polynomial, name)?.matches())
}

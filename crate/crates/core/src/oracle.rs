//! Brute-force ground truth: every Heron triangle up to a perimeter bound.
//!
//! Nothing here uses the lemma pipeline or the `(x, y, z)` area form.
//! Triangles are found by scanning side triples and evaluating Heron's
//! formula in side coordinates.

use std::collections::BTreeMap;

use crate::arith::Nat;
use crate::error::{Error, Result};
use crate::triangle::{area_squared, is_equable, HeronTriangle, SideTriple, XyzTriple};

/// Inclusive upper bound on the perimeter, at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBound {
    p_max: u64,
}

impl SearchBound {
    pub fn new(p_max: u64) -> Result<Self> {
        if p_max < 3 {
            return Err(Error::BoundTooSmall(p_max));
        }
        Ok(SearchBound { p_max })
    }

    pub fn p_max(&self) -> u64 {
        self.p_max
    }

    /// `16 A^2 <= p^4` must be representable.
    fn check_range(&self) -> Result<()> {
        Nat::from(self.p_max).try_pow(4).map(|_| ())
    }
}

/// Calls `f` with every sorted side triple of perimeter `p`.
fn for_each_side_triple(p: u64, mut f: impl FnMut(SideTriple) -> Result<()>) -> Result<()> {
    // a <= b <= c, a + b > c  <=>  c < p/2, and c >= p/3
    let c_min = p.div_ceil(3);
    let c_max = (p - 1) / 2;
    for c in c_min..=c_max {
        let rest = p - c;
        let b_min = rest.div_ceil(2);
        let b_max = c.min(rest - 1);
        for b in b_min..=b_max {
            f(SideTriple::new(rest - b, b, c)?)?;
        }
    }
    Ok(())
}

/// All Heron triangles with perimeter `<= p_max`, sorted by `(p, a, b, c)`.
///
/// Only even perimeters are scanned; [`find_odd_perimeter_heron`] checks
/// separately that odd perimeters contribute nothing.
pub fn enumerate_heron(bound: SearchBound) -> Result<Vec<HeronTriangle>> {
    bound.check_range()?;
    let mut found = Vec::new();
    for p in (4..=bound.p_max).step_by(2) {
        for_each_side_triple(p, |t| {
            if let Some(h) = HeronTriangle::from_sides(t)? {
                found.push(h);
            }
            Ok(())
        })?;
    }
    found.sort();
    Ok(found)
}

/// Odd-perimeter side triples with integer area up to the bound. Expected empty.
pub fn find_odd_perimeter_heron(bound: SearchBound) -> Result<Vec<SideTriple>> {
    bound.check_range()?;
    let mut found = Vec::new();
    for p in (3..=bound.p_max).step_by(2) {
        for_each_side_triple(p, |t| {
            if crate::triangle::heron_area(t)?.is_some() {
                found.push(t);
            }
            Ok(())
        })?;
    }
    Ok(found)
}

pub fn find_equable(bound: SearchBound) -> Result<Vec<HeronTriangle>> {
    Ok(enumerate_heron(bound)?
        .into_iter()
        .filter(is_equable)
        .collect())
}

/// Heron triangles with perimeter strictly greater than area.
pub fn find_perimeter_exceeds_area(bound: SearchBound) -> Result<Vec<HeronTriangle>> {
    Ok(enumerate_heron(bound)?
        .into_iter()
        .filter(|h| h.perimeter() > h.area())
        .collect())
}

/// Two distinct Heron triangles, each one's area equal to the other's perimeter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmicablePair {
    first: HeronTriangle,
    second: HeronTriangle,
}

impl AmicablePair {
    /// Orders the members canonically; `None` unless the two are distinct and amicable.
    pub fn new(h1: HeronTriangle, h2: HeronTriangle) -> Option<Self> {
        if h1.sides() == h2.sides() || h1.area() != h2.perimeter() || h1.perimeter() != h2.area() {
            return None;
        }
        let (first, second) = if h1 <= h2 { (h1, h2) } else { (h2, h1) };
        Some(AmicablePair { first, second })
    }

    pub fn first(&self) -> &HeronTriangle {
        &self.first
    }

    pub fn second(&self) -> &HeronTriangle {
        &self.second
    }

    pub fn sides(&self) -> [SideTriple; 2] {
        [self.first.sides(), self.second.sides()]
    }
}

/// All amicable pairs whose members both have perimeter `<= p_max`.
///
/// Equable triangles are never paired, not even with a different equable
/// triangle of the same perimeter; they belong to [`find_equable`].
pub fn find_amicable(bound: SearchBound) -> Result<Vec<AmicablePair>> {
    let all = enumerate_heron(bound)?;
    let mut by_shape: BTreeMap<(u64, u64), Vec<HeronTriangle>> = BTreeMap::new();
    for h in &all {
        by_shape
            .entry((h.perimeter(), h.area()))
            .or_default()
            .push(*h);
    }
    let mut pairs = Vec::new();
    for h in all.iter().filter(|h| !is_equable(h)) {
        if let Some(partners) = by_shape.get(&(h.area(), h.perimeter())) {
            pairs.extend(
                partners
                    .iter()
                    .filter_map(|g| AmicablePair::new(*h, *g))
                    .filter(|pair| pair.first() == h),
            );
        }
    }
    pairs.sort();
    Ok(pairs)
}

/// Outcome of an exhaustive partner scan over one semiperimeter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartnerSearch {
    /// Number of `x <= y <= z` triples with the target sum that were tested.
    pub examined: u64,
    pub partners: Vec<XyzTriple>,
}

/// Every `x <= y <= z` with `x + y + z = s_target` and `s*x*y*z = area_target^2`.
pub fn partner_enumerate(s_target: u64, area_target: u64) -> Result<PartnerSearch> {
    let want = Nat::from(area_target).try_pow(2)?;
    let mut examined = 0;
    let mut partners = Vec::new();
    for x in 1..=s_target / 3 {
        for y in x..=(s_target - x) / 2 {
            let t = XyzTriple::new(x, y, s_target - x - y)?;
            examined += 1;
            if area_squared(t)? == want {
                partners.push(t);
            }
        }
    }
    Ok(PartnerSearch { examined, partners })
}

//! Non-dominated (delay, power) frontiers.
//!
//! A DP state's achievable costs are kept as a Pareto frontier rather than a
//! scalar: delay- and power-optimal answers live at the frontier's ends and
//! the PDP optimum is always on the frontier (the product is monotone in both
//! coordinates), so one carrier serves all three objectives exactly.

use serde::{Serialize, Serializer};

use crate::cost::{Cost, CostPoint, Objective};

/// A frontier of mutually non-dominated cost points, sorted by strictly
/// increasing delay (hence strictly decreasing power).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParetoSet {
    points: Vec<CostPoint>,
}

impl ParetoSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(point: CostPoint) -> Self {
        Self { points: vec![point] }
    }

    /// Insert a point, dropping it if dominated and evicting any points it
    /// dominates. Returns true if the point is on the resulting frontier.
    pub fn insert(&mut self, point: CostPoint) -> bool {
        if self
            .points
            .iter()
            .any(|p| p.dominates(&point) || *p == point)
        {
            return self.points.contains(&point);
        }
        self.points.retain(|p| !point.dominates(p));
        let pos = self
            .points
            .partition_point(|p| (p.delay, p.power) < (point.delay, point.power));
        self.points.insert(pos, point);
        true
    }

    pub fn points(&self) -> &[CostPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_delay(&self) -> Option<Cost> {
        self.points.first().map(|p| p.delay)
    }

    pub fn min_power(&self) -> Option<Cost> {
        self.points.last().map(|p| p.power)
    }

    pub fn min_pdp(&self) -> Option<Cost> {
        self.points.iter().map(|p| p.pdp()).min()
    }

    /// The frontier point optimizing the objective; ties (possible only for
    /// PDP) resolve to the smaller delay.
    pub fn best(&self, objective: Objective) -> Option<CostPoint> {
        match objective {
            Objective::Delay => self.points.first().copied(),
            Objective::Power => self.points.last().copied(),
            Objective::Pdp => self
                .points
                .iter()
                .copied()
                .min_by_key(|p| (p.pdp(), p.delay)),
        }
    }
}

impl Serialize for ParetoSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

/// A frontier whose points carry a payload describing how each cost is
/// realized (a partition, a tree, a plan seed). On exact cost ties the
/// payload preferred by `tie_prefer` survives, keeping results deterministic.
#[derive(Debug, Clone)]
pub(crate) struct Frontier<T> {
    entries: Vec<(CostPoint, T)>,
}

impl<T: Clone> Frontier<T> {
    pub fn new() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn singleton(point: CostPoint, payload: T) -> Self {
        Self { entries: vec![(point, payload)] }
    }

    /// Insert with a tie preference: `tie_prefer(new, old)` returns true when
    /// the new payload should replace an old one of identical cost.
    pub fn insert(
        &mut self,
        point: CostPoint,
        payload: T,
        tie_prefer: impl Fn(&T, &T) -> bool,
    ) {
        for (p, existing) in &mut self.entries {
            if *p == point {
                if tie_prefer(&payload, existing) {
                    *existing = payload;
                }
                return;
            }
            if p.dominates(&point) {
                return;
            }
        }
        self.entries.retain(|(p, _)| !point.dominates(p));
        let pos = self
            .entries
            .partition_point(|(p, _)| (p.delay, p.power) < (point.delay, point.power));
        self.entries.insert(pos, (point, payload));
    }

    pub fn entries(&self) -> &[(CostPoint, T)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn best(&self, objective: Objective) -> Option<&(CostPoint, T)> {
        match objective {
            Objective::Delay => self.entries.first(),
            Objective::Power => self.entries.last(),
            Objective::Pdp => self
                .entries
                .iter()
                .min_by_key(|(p, _)| (p.pdp(), p.delay)),
        }
    }

    pub fn to_pareto_set(&self) -> ParetoSet {
        ParetoSet { points: self.entries.iter().map(|(p, _)| *p).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Cost;
    use proptest::prelude::*;

    fn pt(d: i64, p: i64) -> CostPoint {
        CostPoint::new(Cost::from_integer(d), Cost::from_integer(p))
    }

    #[test]
    fn insert_keeps_only_nondominated() {
        let mut set = ParetoSet::new();
        assert!(set.insert(pt(4, 10)));
        assert!(set.insert(pt(2, 20)));
        assert!(!set.insert(pt(5, 30))); // dominated by (4, 10)
        assert!(set.insert(pt(1, 40)));
        assert_eq!(set.points(), &[pt(1, 40), pt(2, 20), pt(4, 10)]);
        // A new point evicting the middle one.
        assert!(set.insert(pt(2, 15)));
        assert_eq!(set.points(), &[pt(1, 40), pt(2, 15), pt(4, 10)]);
    }

    #[test]
    fn accessors_on_empty_set() {
        let set = ParetoSet::new();
        assert!(set.min_delay().is_none());
        assert!(set.min_power().is_none());
        assert!(set.min_pdp().is_none());
        assert!(set.best(Objective::Pdp).is_none());
    }

    #[test]
    fn min_pdp_scans_all_points() {
        let mut set = ParetoSet::new();
        set.insert(pt(1, 100)); // pdp 100
        set.insert(pt(5, 11)); // pdp 55
        set.insert(pt(10, 10)); // pdp 100
        assert_eq!(set.min_pdp(), Some(Cost::from_integer(55)));
        assert_eq!(set.best(Objective::Pdp), Some(pt(5, 11)));
        assert_eq!(set.best(Objective::Delay), Some(pt(1, 100)));
        assert_eq!(set.best(Objective::Power), Some(pt(10, 10)));
        // min_pdp is at most the pdp of every point.
        for p in set.points() {
            assert!(set.min_pdp().unwrap() <= p.pdp());
        }
    }

    #[test]
    fn frontier_tie_preference() {
        let mut f: Frontier<&str> = Frontier::new();
        f.insert(pt(2, 2), "worse", |_, _| false);
        f.insert(pt(2, 2), "better", |new, old| *new < *old);
        assert_eq!(f.entries().len(), 1);
        assert_eq!(f.entries()[0].1, "better");
        f.insert(pt(2, 2), "zzz", |new, old| *new < *old);
        assert_eq!(f.entries()[0].1, "better");
    }

    proptest! {
        /// Insertion is idempotent and order-independent: any insertion order
        /// of the same multiset yields the same frontier.
        #[test]
        fn insertion_order_independent(raw in proptest::collection::vec((0i64..6, 0i64..6), 1..24)) {
            let points: Vec<CostPoint> = raw.iter().map(|&(d, p)| pt(d, p)).collect();
            let mut forward = ParetoSet::new();
            for &p in &points {
                forward.insert(p);
            }
            let mut backward = ParetoSet::new();
            for &p in points.iter().rev() {
                backward.insert(p);
            }
            let mut twice = ParetoSet::new();
            for &p in points.iter().chain(points.iter()) {
                twice.insert(p);
            }
            prop_assert_eq!(forward.clone(), backward);
            prop_assert_eq!(forward.clone(), twice);
            // No point dominates another.
            for a in forward.points() {
                for b in forward.points() {
                    prop_assert!(!(a != b && a.dominates(b)));
                }
            }
        }
    }
}

//! Searches as names.
//!
//! A semidecision procedure becomes a point of Sierpiński space by encoding
//! its progress as a bit stream: bit `n` is 1 exactly when the search has
//! confirmed within its first `n + 1` internal steps. Internal steps are a
//! deterministic schedule of the process — fuel only limits how far a query
//! may advance it, never what the bits are.
//!
//! The module also provides the fair dovetailer used for countable
//! disjunctions: components receive attention with weight `1/(i+1)²`, so a
//! component confirming on its own within fuel `f` forces confirmation of
//! the disjunction within `c·(i+1)²·(f+1)` total fuel, with `c = 32`
//! covering scheduling overhead.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::{Arc, Mutex};

use crate::fuel::{FuelMeter, Interrupt, Observation};
use crate::names::{Name, NameFn};

/// Fuel granted to a component per visit of the dovetailer. Large enough
/// that block reads and rational comparisons complete within one visit;
/// stateful components resume partial work across visits either way.
pub const POLL_SLICE: u64 = 64;

/// Documented constant for the fairness bound of [`dovetail_or`]:
/// confirmation within `FAIRNESS_C · (i+1)² · (f_i+1)` fuel when component
/// `i` confirms alone within fuel `f_i`.
pub const FAIRNESS_C: u64 = 256;

/// One step of a resumable search.
pub enum StepOutcome {
    /// Keep going.
    Progress,
    /// The search succeeded at this step.
    Confirmed,
    /// The search can never succeed: a partial input ran out everywhere.
    Dead,
}

/// A deterministic, resumable semidecision procedure.
///
/// `step` may charge fuel and may be interrupted; an interrupt must leave
/// the state so that the same internal step is retried later. The sequence
/// of internal steps and their outcomes must not depend on fuel.
pub trait SearchProcess: Send {
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome>;
}

enum Verdict {
    /// Confirmed at internal step `n` (1-based).
    Confirmed(u64),
    /// Dead after `n` steps; later bits are beyond the knowable prefix.
    Dead(u64),
}

struct SearchState {
    process: Box<dyn SearchProcess>,
    steps_done: u64,
    verdict: Option<Verdict>,
}

struct SearchSource {
    state: Mutex<SearchState>,
}

impl SearchSource {
    /// Advance the process until `steps_done >= target` or a verdict.
    fn advance(&self, target: u64, meter: &mut FuelMeter) -> Observation<()> {
        let mut st = self.state.lock().unwrap();
        while st.verdict.is_none() && st.steps_done < target {
            meter.charge(1)?;
            match st.process.step(meter)? {
                StepOutcome::Progress => st.steps_done += 1,
                StepOutcome::Confirmed => {
                    st.steps_done += 1;
                    let at = st.steps_done;
                    st.verdict = Some(Verdict::Confirmed(at));
                }
                StepOutcome::Dead => {
                    st.steps_done += 1;
                    let at = st.steps_done;
                    st.verdict = Some(Verdict::Dead(at));
                }
            }
        }
        Ok(())
    }
}

impl NameFn for SearchSource {
    fn bit(&self, idx: u64, meter: &mut FuelMeter) -> Observation<bool> {
        let target = idx.saturating_add(1);
        self.advance(target, meter)?;
        let st = self.state.lock().unwrap();
        match &st.verdict {
            Some(Verdict::Confirmed(at)) => Ok(*at <= target),
            Some(Verdict::Dead(at)) => {
                if target < *at {
                    Ok(false)
                } else {
                    Err(Interrupt::BeyondPrefix)
                }
            }
            None => Ok(false),
        }
    }

    fn label(&self) -> &'static str {
        "search"
    }
}

/// Wrap a search process as a Sierpiński-space name.
pub fn search_name(process: impl SearchProcess + 'static) -> Name {
    Name::custom(Arc::new(SearchSource {
        state: Mutex::new(SearchState {
            process: Box::new(process),
            steps_done: 0,
            verdict: None,
        }),
    }))
}

/// What one dovetailer step did.
pub enum DovetailEvent {
    /// A component was visited without resolution.
    Polled,
    /// Component `i` produced a 1 and has been retired.
    Emitted(u64),
    /// Every component is dead.
    AllDead,
}

struct ComponentObs {
    name: Option<Name>,
    next_bit: u64,
    polls: u64,
    retired: bool,
}

/// Fair scheduler over countably many Sierpiński names. Component `i`
/// enters the schedule with priority `(i+1)²` and is revisited with
/// priority `(polls+1)·(i+1)²`, which realizes the quadratic-share
/// fairness bound.
pub struct Dovetailer {
    supplier: Box<dyn Fn(u64) -> Name + Send>,
    /// Number of components, when finite.
    bound: Option<u64>,
    heap: BinaryHeap<Reverse<(u128, u64)>>,
    components: Vec<ComponentObs>,
    next_fresh: u64,
    live: u64,
}

impl Dovetailer {
    pub fn new(bound: Option<u64>, supplier: impl Fn(u64) -> Name + Send + 'static) -> Self {
        Dovetailer {
            supplier: Box::new(supplier),
            bound,
            heap: BinaryHeap::new(),
            components: Vec::new(),
            next_fresh: 0,
            live: 0,
        }
    }

    fn priority(polls: u64, index: u64) -> u128 {
        (polls as u128 + 1) * ((index as u128 + 1) * (index as u128 + 1))
    }

    fn fresh_available(&self) -> bool {
        match self.bound {
            Some(b) => self.next_fresh < b,
            None => true,
        }
    }

    /// Visit one component.
    pub fn step(&mut self, meter: &mut FuelMeter) -> Observation<DovetailEvent> {
        meter.charge(1)?;
        // Choose between the cheapest scheduled component and the next
        // fresh one, whichever has lower priority.
        let scheduled = self.heap.peek().map(|Reverse((p, i))| (*p, *i));
        let fresh = if self.fresh_available() {
            Some((Self::priority(0, self.next_fresh), self.next_fresh))
        } else {
            None
        };
        let index = match (scheduled, fresh) {
            (Some((sp, si)), Some((fp, _fi))) if sp <= fp => {
                self.heap.pop();
                si
            }
            (_, Some((_, fi))) => {
                self.next_fresh += 1;
                self.components.push(ComponentObs {
                    name: None,
                    next_bit: 0,
                    polls: 0,
                    retired: false,
                });
                self.live += 1;
                fi
            }
            (Some((_, si)), None) => {
                self.heap.pop();
                si
            }
            (None, None) => return Ok(DovetailEvent::AllDead),
        };

        let comp = &mut self.components[index as usize];
        if comp.retired {
            return Ok(DovetailEvent::Polled);
        }
        if comp.name.is_none() {
            comp.name = Some((self.supplier)(index));
        }
        let name = comp.name.as_ref().unwrap().clone();
        let bit_idx = comp.next_bit;
        let outcome = meter.run_capped(POLL_SLICE, |m| name.bit_metered(bit_idx, m));
        comp.polls += 1;
        match outcome.result {
            Ok(true) => {
                comp.retired = true;
                self.live -= 1;
                Ok(DovetailEvent::Emitted(index))
            }
            Ok(false) => {
                comp.next_bit += 1;
                self.heap
                    .push(Reverse((Self::priority(comp.polls, index), index)));
                Ok(DovetailEvent::Polled)
            }
            Err(Interrupt::BeyondPrefix) => {
                comp.retired = true;
                self.live -= 1;
                if self.live == 0 && !self.fresh_available() {
                    Ok(DovetailEvent::AllDead)
                } else {
                    Ok(DovetailEvent::Polled)
                }
            }
            Err(Interrupt::FuelExhausted) => {
                self.heap
                    .push(Reverse((Self::priority(comp.polls, index), index)));
                if outcome.cap_limited {
                    // The slice ran out, not the caller's budget; the
                    // component's own state kept the partial work.
                    Ok(DovetailEvent::Polled)
                } else {
                    Err(Interrupt::FuelExhausted)
                }
            }
        }
    }
}

/// A countable disjunction as a search process: confirmed as soon as any
/// component confirms.
pub struct OrSearch {
    dovetailer: Dovetailer,
}

impl OrSearch {
    pub fn new(bound: Option<u64>, supplier: impl Fn(u64) -> Name + Send + 'static) -> Self {
        OrSearch {
            dovetailer: Dovetailer::new(bound, supplier),
        }
    }
}

impl SearchProcess for OrSearch {
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
        match self.dovetailer.step(meter)? {
            DovetailEvent::Emitted(_) => Ok(StepOutcome::Confirmed),
            DovetailEvent::Polled => Ok(StepOutcome::Progress),
            DovetailEvent::AllDead => Ok(StepOutcome::Dead),
        }
    }
}

/// Disjunction of countably many Sierpiński names.
pub fn dovetail_or(bound: Option<u64>, supplier: impl Fn(u64) -> Name + Send + 'static) -> Name {
    search_name(OrSearch::new(bound, supplier))
}

/// A finite conjunction as a search process: confirmed when every component
/// has confirmed; dead if any component goes beyond its prefix.
pub struct AllSearch {
    names: Vec<Name>,
    next_bits: Vec<u64>,
    confirmed: Vec<bool>,
    outstanding: usize,
    cursor: usize,
}

impl AllSearch {
    pub fn new(names: Vec<Name>) -> Self {
        let n = names.len();
        AllSearch {
            next_bits: vec![0; n],
            confirmed: vec![false; n],
            outstanding: n,
            cursor: 0,
            names,
        }
    }
}

impl SearchProcess for AllSearch {
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
        if self.outstanding == 0 {
            return Ok(StepOutcome::Confirmed);
        }
        // Round-robin over unconfirmed components.
        let n = self.names.len();
        let mut idx = self.cursor % n;
        while self.confirmed[idx] {
            idx = (idx + 1) % n;
        }
        let name = self.names[idx].clone();
        let bit_idx = self.next_bits[idx];
        let outcome = meter.run_capped(POLL_SLICE, |m| name.bit_metered(bit_idx, m));
        match outcome.result {
            Ok(true) => {
                self.confirmed[idx] = true;
                self.outstanding -= 1;
                self.cursor = idx + 1;
                if self.outstanding == 0 {
                    Ok(StepOutcome::Confirmed)
                } else {
                    Ok(StepOutcome::Progress)
                }
            }
            Ok(false) => {
                self.next_bits[idx] += 1;
                self.cursor = idx + 1;
                Ok(StepOutcome::Progress)
            }
            Err(Interrupt::BeyondPrefix) => Ok(StepOutcome::Dead),
            Err(Interrupt::FuelExhausted) => {
                self.cursor = idx + 1;
                if outcome.cap_limited {
                    Ok(StepOutcome::Progress)
                } else {
                    Err(Interrupt::FuelExhausted)
                }
            }
        }
    }
}

/// Conjunction of finitely many Sierpiński names.
pub fn dovetail_all(names: Vec<Name>) -> Name {
    if names.is_empty() {
        // Empty conjunction is true.
        return Name::ones();
    }
    search_name(AllSearch::new(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top_at(k: usize) -> Name {
        let mut bits = vec![false; k];
        bits.push(true);
        Name::word(bits)
    }

    fn scan_confirms(name: &Name, fuel: u64) -> bool {
        let mut meter = FuelMeter::new(fuel);
        let mut i = 0;
        loop {
            match name.bit_metered(i, &mut meter) {
                Ok(true) => return true,
                Ok(false) => i += 1,
                Err(_) => return false,
            }
        }
    }

    #[test]
    fn or_confirms_component_zero_fast() {
        let or = dovetail_or(None, move |i| if i == 0 { top_at(0) } else { Name::zeros() });
        assert!(scan_confirms(&or, 1_000));
    }

    #[test]
    fn or_confirms_deep_component_within_fairness_bound() {
        let or = dovetail_or(None, move |i| if i == 17 { top_at(2) } else { Name::zeros() });
        // Component 17 alone confirms within f = 8 fuel (three bit queries).
        let f = 8;
        let bound = FAIRNESS_C * 18 * 18 * (f + 1);
        assert!(scan_confirms(&or, bound));
    }

    #[test]
    fn or_of_bottoms_stays_silent() {
        let or = dovetail_or(None, |_| Name::zeros());
        assert!(!scan_confirms(&or, 100_000));
    }

    #[test]
    fn all_requires_every_component() {
        let both = dovetail_all(vec![top_at(3), top_at(5)]);
        assert!(scan_confirms(&both, 1_000));
        let half = dovetail_all(vec![top_at(3), Name::zeros()]);
        assert!(!scan_confirms(&half, 100_000));
    }

    #[test]
    fn search_bits_are_monotone_and_deterministic() {
        let or = dovetail_or(Some(4), move |i| if i == 2 { top_at(1) } else { Name::zeros() });
        let a = or.prefix(64, 100_000).unwrap();
        let b = or.prefix(64, 100_000).unwrap();
        assert_eq!(a, b);
        let first_one = a.iter().position(|&x| x);
        assert!(first_one.is_some());
        assert!(a[first_one.unwrap()..].iter().all(|&x| x));
    }

    #[test]
    fn finite_dead_components_kill_the_or() {
        // All components read past a partial word: the disjunction itself
        // is beyond its prefix.
        let or = dovetail_or(Some(2), |_| Name::partial_word(vec![false]));
        let mut meter = FuelMeter::new(10_000);
        let mut saw_beyond = false;
        for i in 0..64 {
            match or.bit_metered(i, &mut meter) {
                Err(Interrupt::BeyondPrefix) => {
                    saw_beyond = true;
                    break;
                }
                Ok(false) => {}
                other => panic!("unexpected {other:?}"),
            }
        }
        assert!(saw_beyond);
    }
}

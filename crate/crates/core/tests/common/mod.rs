//! One-line pass/fail reporting for the acceptance checks, with timing.

use std::time::{Duration, Instant};

pub struct Criterion {
    num: usize,
    name: &'static str,
    started: Instant,
}

impl Criterion {
    pub fn start(num: usize, name: &'static str) -> Self {
        Criterion { num, name, started: Instant::now() }
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    fn line(&self, outcome: &str, detail: &str) -> String {
        format!(
            "acceptance {:02} {outcome} {} ({detail}) [{:.2?}]",
            self.num,
            self.name,
            self.started.elapsed()
        )
    }

    pub fn pass(self, detail: &str) {
        println!("{}", self.line("PASS", detail));
    }

    pub fn fail(self, detail: &str) -> ! {
        let line = self.line("FAIL", detail);
        println!("{line}");
        panic!("{line}");
    }

    /// Passes or fails on `ok`, with the same detail either way.
    pub fn check(self, ok: bool, detail: &str) {
        if ok {
            self.pass(detail);
        } else {
            self.fail(detail);
        }
    }
}

/// Asserts a wall-clock budget while passing the outcome through.
pub fn within(budget: Duration, c: &Criterion) -> bool {
    c.elapsed() < budget
}

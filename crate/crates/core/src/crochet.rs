//! Hyperbolic crochet: rows whose stitch counts grow geometrically.
//!
//! Working two stitches into every `n`-th stitch multiplies the row length by
//! `(n + 1)/n`. Circumference that grows exponentially with distance is the
//! signature of constant negative curvature, so the fabric ruffles into a
//! model of the hyperbolic plane.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::curvature::Curvature;
use crate::error::{domain, Result};

/// Rows longer than this many stitches are refused.
pub const MAX_ROW_STITCHES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gauge {
    pub stitch_width_mm: f64,
    pub row_height_mm: f64,
}

impl Default for Gauge {
    fn default() -> Self {
        Gauge {
            stitch_width_mm: 5.0,
            row_height_mm: 4.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrochetSpec {
    foundation: u64,
    increase_every: u64,
    rows: u32,
    gauge: Gauge,
}

impl CrochetSpec {
    pub fn new(foundation: u64, increase_every: u64, rows: u32, gauge: Gauge) -> Result<Self> {
        if foundation < 4 {
            return Err(domain(format!(
                "foundation must be at least 4 stitches, got {foundation}"
            )));
        }
        if increase_every < 1 {
            return Err(domain("increase interval n must be at least 1"));
        }
        if rows < 1 {
            return Err(domain("need at least 1 row"));
        }
        for (name, v) in [
            ("stitch width", gauge.stitch_width_mm),
            ("row height", gauge.row_height_mm),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(CrochetSpec {
            foundation,
            increase_every,
            rows,
            gauge,
        })
    }

    pub fn foundation(&self) -> u64 {
        self.foundation
    }

    pub fn increase_every(&self) -> u64 {
        self.increase_every
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn gauge(&self) -> Gauge {
        self.gauge
    }

    /// Ideal real-valued length of row `k`, `foundation·((n+1)/n)^k`.
    pub fn ideal_count(&self, k: u32) -> f64 {
        let n = self.increase_every as f64;
        self.foundation as f64 * (k as f64 * (1.0 / n).ln_1p()).exp()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrochetSchedule {
    pub foundation: u64,
    pub increase_every: u64,
    /// Stitch count of each row; row 0 is the foundation chain.
    pub counts: Vec<u64>,
    /// For each row, the stitches of the previous row that take an increase.
    /// Row 0 has none.
    pub increases: Vec<Vec<u64>>,
}

/// Row counts `⌊foundation·((n+1)/n)^k⌋`, computed exactly.
///
/// Taking the floor of the exact value is error diffusion with the carried
/// fraction kept in full, so every row stays within one stitch of the ideal
/// exponential. Increases are spread as evenly as possible along each row.
pub fn stitch_schedule(spec: &CrochetSpec) -> Result<CrochetSchedule> {
    let n = BigUint::from(spec.increase_every);
    let n1 = BigUint::from(spec.increase_every + 1);
    let mut num = BigUint::from(spec.foundation);
    let mut den = BigUint::from(1u32);
    let mut counts = vec![spec.foundation];
    let mut increases = vec![Vec::new()];
    for _ in 0..spec.rows {
        num *= &n1;
        den *= &n;
        let count: u64 = (&num / &den)
            .try_into()
            .ok()
            .filter(|&c| c <= MAX_ROW_STITCHES)
            .ok_or_else(|| {
                domain(format!(
                    "rows would exceed {MAX_ROW_STITCHES} stitches; request fewer rows"
                ))
            })?;
        let prev = *counts.last().unwrap();
        increases.push(spread(prev, count - prev));
        counts.push(count);
    }
    Ok(CrochetSchedule {
        foundation: spec.foundation,
        increase_every: spec.increase_every,
        counts,
        increases,
    })
}

/// Bresenham placement of `inc` marks among `m` stitches: the `j`-th mark
/// falls on stitch `⌊(j+1)·m/inc⌋ − 1`.
fn spread(m: u64, inc: u64) -> Vec<u64> {
    assert!(inc <= m, "a row cannot take more increases than it has stitches");
    (0..inc)
        .map(|j| ((j as u128 + 1) * m as u128 / inc as u128) as u64 - 1)
        .collect()
}

/// `K = −(ln((n+1)/n)/h)²` in 1/mm², matching `C ∝ e^{r√|K|}` to the fabric.
pub fn estimate_curvature(spec: &CrochetSpec) -> Curvature {
    let rate = (1.0 / spec.increase_every as f64).ln_1p() / spec.gauge.row_height_mm;
    Curvature::new(-rate * rate).expect("finite by construction")
}

// ---------------------------------------------------------------------------
// Handout text

#[derive(Debug, Clone, PartialEq)]
enum Item {
    Sc(u64),
    Inc,
    Repeat(Vec<Item>, u64),
}

impl Item {
    /// Stitches consumed from the previous row and produced in this one.
    fn counts(&self) -> (u64, u64) {
        match self {
            Item::Sc(k) => (*k, *k),
            Item::Inc => (1, 2),
            Item::Repeat(body, times) => {
                let (c, p) = totals(body);
                (c * times, p * times)
            }
        }
    }
}

fn totals(items: &[Item]) -> (u64, u64) {
    items.iter().fold((0, 0), |(c, p), it| {
        let (ci, pi) = it.counts();
        (c + ci, p + pi)
    })
}

fn render(items: &[Item]) -> String {
    items
        .iter()
        .map(|it| match it {
            Item::Sc(k) => format!("sc {k}"),
            Item::Inc => "inc".to_string(),
            Item::Repeat(body, times) => format!("({}) × {times}", render(body)),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// One group per increase: the plain stitches before it, then the increase.
fn group(sc: u64) -> Vec<Item> {
    if sc == 0 {
        vec![Item::Inc]
    } else {
        vec![Item::Sc(sc), Item::Inc]
    }
}

/// Run-length encodes consecutive equal groups.
fn rle(gaps: &[u64]) -> Vec<Item> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < gaps.len() {
        let mut j = i;
        while j < gaps.len() && gaps[j] == gaps[i] {
            j += 1;
        }
        if j - i == 1 {
            out.extend(group(gaps[i]));
        } else {
            out.push(Item::Repeat(group(gaps[i]), (j - i) as u64));
        }
        i = j;
    }
    out
}

fn row_pattern(prev: u64, positions: &[u64]) -> Vec<Item> {
    if positions.is_empty() {
        return vec![Item::Sc(prev)];
    }
    let mut gaps = Vec::with_capacity(positions.len());
    let mut next = 0;
    for &p in positions {
        gaps.push(p - next);
        next = p + 1;
    }
    // shortest period that tiles the whole gap sequence
    let len = gaps.len();
    let period = (1..=len)
        .find(|&d| len % d == 0 && (d..len).all(|i| gaps[i] == gaps[i - d]))
        .unwrap_or(len);
    let mut items = if period < len {
        let body = rle(&gaps[..period]);
        let times = (len / period) as u64;
        match body.as_slice() {
            // a single repeated group is already `(sc a, inc) × m`
            [Item::Repeat(inner, k)] => vec![Item::Repeat(inner.clone(), k * times)],
            _ => vec![Item::Repeat(body, times)],
        }
    } else {
        rle(&gaps)
    };
    let tail = prev - next;
    if tail > 0 {
        items.push(Item::Sc(tail));
    }
    items
}

/// One handout line per row, e.g. `Row 1: (sc 4, inc) × 4 — 24 sts`.
pub fn instructions(s: &CrochetSchedule) -> Vec<String> {
    let mut lines = vec![format!("Row 0: chain {0}, join — {0} sts", s.foundation)];
    for k in 1..s.counts.len() {
        let items = row_pattern(s.counts[k - 1], &s.increases[k]);
        lines.push(format!("Row {k}: {} — {} sts", render(&items), s.counts[k]));
    }
    lines
}

/// Reads handout lines back into row stitch counts, checking that each
/// pattern consumes exactly the previous row and produces the stated count.
pub fn parse_instructions<S: AsRef<str>>(lines: &[S]) -> Result<Vec<u64>> {
    let mut counts: Vec<u64> = Vec::new();
    for (k, line) in lines.iter().enumerate() {
        let line = line.as_ref();
        let bad = |why: &str| domain(format!("line {}: {why}: {line:?}", k + 1));
        let rest = line
            .strip_prefix(&format!("Row {k}: "))
            .ok_or_else(|| bad("expected the row number"))?;
        let (body, stated) = rest.rsplit_once(" — ").ok_or_else(|| bad("missing stitch total"))?;
        let stated: u64 = stated
            .strip_suffix(" sts")
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("malformed stitch total"))?;
        if k == 0 {
            let chain: u64 = body
                .strip_prefix("chain ")
                .and_then(|t| t.strip_suffix(", join"))
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("row 0 must be a joined chain"))?;
            if chain != stated {
                return Err(bad("chain length differs from the stated total"));
            }
        } else {
            let mut p = Parser { s: body, pos: 0 };
            let items = p.sequence().map_err(|e| bad(&e))?;
            if p.pos != body.len() {
                return Err(bad("trailing text"));
            }
            let (consumed, produced) = totals(&items);
            if consumed != counts[k - 1] {
                return Err(bad("pattern does not consume the previous row"));
            }
            if produced != stated {
                return Err(bad("pattern does not produce the stated total"));
            }
        }
        counts.push(stated);
    }
    Ok(counts)
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> std::result::Result<u64, String> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| "expected a number".to_string())?;
        self.pos += digits;
        Ok(n)
    }

    fn sequence(&mut self) -> std::result::Result<Vec<Item>, String> {
        let mut items = vec![self.item()?];
        while self.eat(", ") {
            items.push(self.item()?);
        }
        Ok(items)
    }

    fn item(&mut self) -> std::result::Result<Item, String> {
        if self.eat("sc ") {
            Ok(Item::Sc(self.number()?))
        } else if self.eat("inc") {
            Ok(Item::Inc)
        } else if self.eat("(") {
            let body = self.sequence()?;
            if !self.eat(") × ") {
                return Err("unclosed repeat".to_string());
            }
            Ok(Item::Repeat(body, self.number()?))
        } else {
            Err(format!("unexpected text at column {}", self.pos + 1))
        }
    }
}

//! Encoding, q^2-ary symmetric and erasure channels, and decoders.
//!
//! All randomness comes from [`RNG_NAME`]: trial `t` of an experiment with
//! base seed `s` draws from `ChaCha8Rng::seed_from_u64(s.wrapping_add(t))`,
//! message first, then channel events in coordinate order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::agcode::{codeword_count, min_distance, walk_codewords, DistanceMode, LinearCode};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::linalg::solve_left;

pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

/// Codebooks up to this many stored symbols are materialized for repeated
/// nearest-codeword decoding.
const CODEBOOK_SYMBOL_LIMIT: u128 = 1 << 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelKind {
    Symmetric,
    Erasure,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChannelSpec {
    pub kind: ChannelKind,
    pub p: f64,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(kind: ChannelKind, p: f64, seed: u64) -> Result<ChannelSpec> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!(
                "probability {p} is not in [0, 1]"
            )));
        }
        Ok(ChannelSpec { kind, p, seed })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoder {
    Nearest,
    Erasure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TransmissionReport {
    pub trials: u64,
    pub word_errors: u64,
    pub symbol_errors_injected: u64,
    pub decoder: Decoder,
}

/// `message * G`.
pub fn encode(code: &LinearCode, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
    code.generator().vec_mul(code.field(), message)
}

/// Output of a channel use. `mask[i]` marks a substituted (symmetric) or
/// erased (erasure) coordinate; erased coordinates read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transmission {
    pub received: Vec<FieldElement>,
    pub mask: Vec<bool>,
}

impl Transmission {
    pub fn corrupted(&self) -> Vec<usize> {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect()
    }
}

fn transmit_with<R: Rng>(
    rng: &mut R,
    field: &Field,
    kind: ChannelKind,
    p: f64,
    word: &[FieldElement],
) -> Transmission {
    let size = field.size();
    let mut received = word.to_vec();
    let mut mask = vec![false; word.len()];
    for (i, sym) in received.iter_mut().enumerate() {
        if !rng.gen_bool(p) {
            continue;
        }
        mask[i] = true;
        match kind {
            ChannelKind::Symmetric => {
                let mut other = rng.gen_range(0..size - 1);
                if other >= sym.enc() {
                    other += 1;
                }
                *sym = field.element(other).expect("in range");
            }
            ChannelKind::Erasure => *sym = FieldElement::ZERO,
        }
    }
    Transmission { received, mask }
}

/// One channel use seeded by `spec.seed`.
pub fn transmit(spec: &ChannelSpec, field: &Field, word: &[FieldElement]) -> Transmission {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    transmit_with(&mut rng, field, spec.kind, spec.p, word)
}

fn hamming(a: &[FieldElement], b: &[FieldElement]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub message: Vec<FieldElement>,
    pub codeword: Vec<FieldElement>,
    pub distance: usize,
}

/// Nearest codeword by exhaustive search. Ties go to the lexicographically
/// smallest message (canonical encodings, first coordinate most significant).
pub fn decode_nearest(code: &LinearCode, received: &[FieldElement]) -> Result<Decoded> {
    if received.len() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: received.len(),
        });
    }
    crate::agcode::check_guard(code)?;
    let search = |first: Option<FieldElement>| {
        let mut best: Option<Decoded> = None;
        walk_codewords(code, first, |msg, cw| {
            let d = hamming(cw, received);
            if best.as_ref().is_none_or(|b| d < b.distance) {
                best = Some(Decoded {
                    message: msg.to_vec(),
                    codeword: cw.to_vec(),
                    distance: d,
                });
            }
        });
        best
    };
    let candidates: Vec<Option<Decoded>> = if code.k() == 0 {
        vec![search(None)]
    } else {
        let prefixes: Vec<_> = code.field().elements().collect();
        prefixes.into_par_iter().map(|v| search(Some(v))).collect()
    };
    // Candidates arrive in prefix order; keep the first strict minimum.
    let mut best: Option<Decoded> = None;
    for c in candidates.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| c.distance < b.distance) {
            best = Some(c);
        }
    }
    Ok(best.expect("the zero codeword always exists"))
}

/// Every codeword in message order, for repeated decoding.
struct Codebook {
    n: usize,
    k: usize,
    size: u32,
    words: Vec<FieldElement>,
}

impl Codebook {
    fn new(code: &LinearCode) -> Codebook {
        let mut words = Vec::with_capacity(codeword_count(code) as usize * code.n());
        walk_codewords(code, None, |_, cw| words.extend_from_slice(cw));
        Codebook {
            n: code.n(),
            k: code.k(),
            size: code.field().size(),
            words,
        }
    }

    fn decode(&self, field: &Field, received: &[FieldElement]) -> Decoded {
        let mut best = (usize::MAX, 0usize);
        for (idx, cw) in self.words.chunks_exact(self.n.max(1)).enumerate() {
            let mut d = 0;
            for (a, b) in cw.iter().zip(received) {
                if a != b {
                    d += 1;
                    if d >= best.0 {
                        break;
                    }
                }
            }
            if d < best.0 {
                best = (d, idx);
            }
        }
        if self.n == 0 {
            best = (0, 0);
        }
        let mut message = vec![FieldElement::ZERO; self.k];
        let mut rest = best.1 as u64;
        for slot in message.iter_mut().rev() {
            *slot = field
                .element((rest % self.size as u64) as u32)
                .expect("digit");
            rest /= self.size as u64;
        }
        let codeword = self.words[best.1 * self.n..(best.1 + 1) * self.n].to_vec();
        Decoded {
            message,
            codeword,
            distance: best.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErasureFailure {
    /// The surviving coordinates do not determine the codeword.
    NotUnique,
    /// No codeword agrees with the surviving coordinates.
    Inconsistent,
}

/// Recovers the codeword agreeing with `received` outside `erased`.
pub fn decode_erasures(
    code: &LinearCode,
    received: &[FieldElement],
    erased: &[usize],
) -> Result<std::result::Result<Decoded, ErasureFailure>> {
    let n = code.n();
    if received.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: received.len(),
        });
    }
    let mut is_erased = vec![false; n];
    for &i in erased {
        if i >= n {
            return Err(Error::OutOfRange(format!(
                "erasure position {i} >= n = {n}"
            )));
        }
        is_erased[i] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&i| !is_erased[i]).collect();
    if keep.len() < code.k() {
        return Ok(Err(ErasureFailure::NotUnique));
    }
    let sub = code.generator().select_columns(&keep);
    let rhs: Vec<FieldElement> = keep.iter().map(|&i| received[i]).collect();
    let field = code.field();
    match solve_left(field, &sub, &rhs) {
        None => Ok(Err(ErasureFailure::Inconsistent)),
        Some((_, free)) if free > 0 => Ok(Err(ErasureFailure::NotUnique)),
        Some((message, _)) => {
            let codeword = encode(code, &message)?;
            Ok(Ok(Decoded {
                message,
                codeword,
                distance: 0,
            }))
        }
    }
}

fn random_message<R: Rng>(rng: &mut R, field: &Field, k: usize) -> Vec<FieldElement> {
    (0..k)
        .map(|_| {
            field
                .element(rng.gen_range(0..field.size()))
                .expect("in range")
        })
        .collect()
}

/// Runs `trials` independent encode / transmit / decode rounds. Symmetric
/// channels use nearest-codeword decoding, erasure channels the erasure
/// decoder; an erasure failure counts as a word error.
pub fn wer_experiment(
    code: &LinearCode,
    spec: &ChannelSpec,
    trials: u64,
) -> Result<TransmissionReport> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    let field = code.field();
    let decoder = match spec.kind {
        ChannelKind::Symmetric => Decoder::Nearest,
        ChannelKind::Erasure => Decoder::Erasure,
    };
    let codebook = match decoder {
        Decoder::Nearest => {
            crate::agcode::check_guard(code)?;
            let symbols = codeword_count(code).saturating_mul(code.n() as u128);
            (symbols <= CODEBOOK_SYMBOL_LIMIT).then(|| Codebook::new(code))
        }
        Decoder::Erasure => None,
    };
    let outcomes: Vec<Result<(bool, u64)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(t));
            let message = random_message(&mut rng, field, code.k());
            let sent = encode(code, &message)?;
            let tx = transmit_with(&mut rng, field, spec.kind, spec.p, &sent);
            let injected = tx.mask.iter().filter(|&&m| m).count() as u64;
            let ok = match decoder {
                Decoder::Nearest => {
                    let got = match &codebook {
                        Some(cb) => cb.decode(field, &tx.received),
                        None => decode_nearest(code, &tx.received)?,
                    };
                    got.codeword == sent
                }
                Decoder::Erasure => match decode_erasures(code, &tx.received, &tx.corrupted())? {
                    Ok(got) => got.codeword == sent,
                    Err(_) => false,
                },
            };
            Ok((!ok, injected))
        })
        .collect();
    let mut report = TransmissionReport {
        trials,
        word_errors: 0,
        symbol_errors_injected: 0,
        decoder,
    };
    for o in outcomes {
        let (err, injected) = o?;
        report.word_errors += err as u64;
        report.symbol_errors_injected += injected;
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChannelSummary {
    pub kind: ChannelKind,
    pub p: f64,
    pub seed: u64,
    pub rng: &'static str,
}

/// The simulation report: code, channel, and outcome counts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub code: CodeSummary,
    pub channel: ChannelSummary,
    pub trials: u64,
    pub word_errors: u64,
    pub symbol_errors_injected: u64,
    pub decoder: Decoder,
}

/// Runs [`wer_experiment`] and attaches the code's distance (exact when the
/// codebook is enumerable, designed bound otherwise).
pub fn simulate(code: &LinearCode, spec: &ChannelSpec, trials: u64) -> Result<SimulationReport> {
    let distance = match min_distance(code, DistanceMode::Exhaustive) {
        Err(Error::EnumerationGuard { .. }) => min_distance(code, DistanceMode::Bound)?,
        other => other?,
    };
    let tx = wer_experiment(code, spec, trials)?;
    Ok(SimulationReport {
        code: CodeSummary {
            n: code.n(),
            k: code.k(),
            d: distance.map(|d| d.d),
            exact: distance.is_none_or(|d| d.exact),
        },
        channel: ChannelSummary {
            kind: spec.kind,
            p: spec.p,
            seed: spec.seed,
            rng: RNG_NAME,
        },
        trials: tx.trials,
        word_errors: tx.word_errors,
        symbol_errors_injected: tx.symbol_errors_injected,
        decoder: tx.decoder,
    })
}

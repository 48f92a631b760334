//! Binary dump of a solved game (the `CWIN1` format).
//!
//! The layout is a byte-exact contract so independent implementations can
//! diff their tables. All integers are little-endian:
//!
//! ```text
//! bytes 0..5    magic "CWIN1"
//! u32           n (vertices)
//! u32           k (cops)
//! u32           rule id: 0 classic, 1 zombie
//! u64           state_count, must equal (k+1)·n^(k+1)
//! bytes         win flags, bit i of byte i/8 (LSB first) is state i;
//!               ceil(state_count/8) bytes, trailing bits zero
//! u32 × count   capture times in state order, 0xFFFFFFFF = never caught
//! ```
//!
//! State i decodes as tag = i mod (k+1), then p_0, …, p_k as base-n digits
//! of i div (k+1), least significant first.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::solver::SolveResult;
use crate::statespace::RuleKind;

pub const MAGIC: &[u8; 5] = b"CWIN1";

fn rule_id(kind: RuleKind) -> u32 {
    match kind {
        RuleKind::Classic => 0,
        RuleKind::Zombie => 1,
    }
}

fn kind_from_id(id: u32) -> Result<RuleKind> {
    match id {
        0 => Ok(RuleKind::Classic),
        1 => Ok(RuleKind::Zombie),
        other => Err(Error::Dump(format!("unknown rule id {other}"))),
    }
}

/// Writes `result` in the format above. Wrap `w` in a `BufWriter` for
/// file output; times are written in chunks either way.
pub fn write_dump(result: &SolveResult, w: &mut impl Write) -> Result<()> {
    let ts = result.transition_system();
    let n = u32::try_from(ts.graph().n())
        .map_err(|_| Error::Dump("graph too large for the dump header".into()))?;
    let k = u32::try_from(ts.k())
        .map_err(|_| Error::Dump("cop count too large for the dump header".into()))?;

    w.write_all(MAGIC)?;
    w.write_all(&n.to_le_bytes())?;
    w.write_all(&k.to_le_bytes())?;
    w.write_all(&rule_id(ts.rule().kind()).to_le_bytes())?;
    w.write_all(&(ts.state_count() as u64).to_le_bytes())?;
    w.write_all(result.copswin_bytes())?;

    let mut buf = Vec::with_capacity(4 * 16384);
    for chunk in result.capture_times().chunks(16384) {
        buf.clear();
        for &t in chunk {
            buf.extend_from_slice(&t.to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

/// A dump loaded back into memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dump {
    pub n: u32,
    pub k: u32,
    pub rule: RuleKind,
    pub state_count: u64,
    /// Bit-packed win flags, exactly as stored.
    pub copswin: Vec<u8>,
    pub capture_time: Vec<u32>,
}

impl Dump {
    /// Win flag of state `i`.
    pub fn copswin(&self, i: usize) -> bool {
        self.copswin[i / 8] >> (i % 8) & 1 == 1
    }

    /// Number of cop-winning states.
    pub fn winning_count(&self) -> u64 {
        self.copswin.iter().map(|b| b.count_ones() as u64).sum()
    }
}

/// Reads and validates a dump: magic, header consistency (the state count
/// must match n and k), exact payload length, and zero trailing flag bits.
pub fn read_dump(r: &mut impl Read) -> Result<Dump> {
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Dump("bad magic: not a CWIN1 dump".into()));
    }
    let mut word = [0u8; 4];
    r.read_exact(&mut word)?;
    let n = u32::from_le_bytes(word);
    r.read_exact(&mut word)?;
    let k = u32::from_le_bytes(word);
    r.read_exact(&mut word)?;
    let rule = kind_from_id(u32::from_le_bytes(word))?;
    let mut long = [0u8; 8];
    r.read_exact(&mut long)?;
    let state_count = u64::from_le_bytes(long);

    let mut expect: u128 = k as u128 + 1;
    for _ in 0..=k {
        expect = expect.saturating_mul(n as u128);
    }
    if expect != state_count as u128 {
        return Err(Error::Dump(format!(
            "header claims {state_count} states, but n = {n}, k = {k} gives {expect}"
        )));
    }
    let sc = usize::try_from(state_count)
        .map_err(|_| Error::Dump("dump too large for this platform".into()))?;

    let mut copswin = vec![0u8; sc.div_ceil(8)];
    r.read_exact(&mut copswin)?;
    if sc % 8 != 0 {
        let tail = copswin[sc / 8] >> (sc % 8);
        if tail != 0 {
            return Err(Error::Dump("nonzero trailing bits in the flag block".into()));
        }
    }

    let mut bytes = vec![0u8; 4 * sc];
    r.read_exact(&mut bytes)?;
    let capture_time = bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect();

    Ok(Dump {
        n,
        k,
        rule,
        state_count,
        copswin,
        capture_time,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::solver::{solve, SolveOptions, ESCAPE};
    use crate::statespace::{MoveRule, TransitionSystem};

    fn solved(family: Family, k: usize, kind: RuleKind) -> SolveResult {
        let g = generate(family, None).unwrap();
        let rule = MoveRule::from_kind(kind, &g);
        let ts = TransitionSystem::new(g, k, rule).unwrap();
        solve(ts, &SolveOptions::default()).unwrap()
    }

    fn dump_bytes(result: &SolveResult) -> Vec<u8> {
        let mut buf = Vec::new();
        write_dump(result, &mut buf).unwrap();
        buf
    }

    #[test]
    fn round_trip_preserves_everything() {
        for (family, k, kind) in [
            (Family::Path { n: 2 }, 1, RuleKind::Classic),
            (Family::Cycle { n: 5 }, 2, RuleKind::Zombie),
        ] {
            let result = solved(family, k, kind);
            let bytes = dump_bytes(&result);
            let dump = read_dump(&mut bytes.as_slice()).unwrap();
            assert_eq!(dump.n as usize, result.transition_system().graph().n());
            assert_eq!(dump.k as usize, result.transition_system().k());
            assert_eq!(dump.rule, kind);
            assert_eq!(dump.state_count as usize, result.stats().states_total);
            for i in 0..result.stats().states_total {
                assert_eq!(dump.copswin(i), result.copswin(i));
                assert_eq!(dump.capture_time[i], result.capture_time(i));
            }
            assert_eq!(dump.winning_count() as usize, result.stats().states_winning);
        }
    }

    #[test]
    fn writes_are_byte_identical() {
        let result = solved(Family::Petersen, 2, RuleKind::Classic);
        assert_eq!(dump_bytes(&result), dump_bytes(&result));
    }

    #[test]
    fn header_layout_is_fixed() {
        let result = solved(Family::Path { n: 2 }, 1, RuleKind::Classic);
        let bytes = dump_bytes(&result);
        assert_eq!(&bytes[0..5], b"CWIN1");
        assert_eq!(&bytes[5..9], &2u32.to_le_bytes()); // n
        assert_eq!(&bytes[9..13], &1u32.to_le_bytes()); // k
        assert_eq!(&bytes[13..17], &0u32.to_le_bytes()); // classic
        assert_eq!(&bytes[17..25], &8u64.to_le_bytes()); // 2·2² states
        // 8 states -> one flag byte, all winning on a single edge
        assert_eq!(bytes[25], 0xff);
        // 8 little-endian u32 times follow; none is ESCAPE
        assert_eq!(bytes.len(), 26 + 32);
        let t0 = u32::from_le_bytes([bytes[26], bytes[27], bytes[28], bytes[29]]);
        assert_eq!(t0, 0); // state 0 is a capture
        assert!(!bytes[26..].chunks(4).any(|c| c == ESCAPE.to_le_bytes()));
    }

    #[test]
    fn rejects_corruption() {
        let result = solved(Family::Path { n: 2 }, 1, RuleKind::Classic);
        let good = dump_bytes(&result);

        let mut bad = good.clone();
        bad[0] = b'X';
        assert!(read_dump(&mut bad.as_slice()).is_err());

        let mut bad = good.clone();
        bad[13] = 9; // unknown rule id
        assert!(read_dump(&mut bad.as_slice()).is_err());

        let mut bad = good.clone();
        bad[17] = 7; // state count no longer matches n, k
        assert!(read_dump(&mut bad.as_slice()).is_err());

        let bad = &good[..good.len() - 1]; // truncated
        assert!(read_dump(&mut &bad[..]).is_err());
    }

    #[test]
    fn rejects_nonzero_tail_bits() {
        // C_3 with one cop: 2·3² = 18 states, so the 3rd flag byte has
        // 6 trailing bits that must stay zero.
        let result = solved(Family::Cycle { n: 3 }, 1, RuleKind::Classic);
        let mut bytes = dump_bytes(&result);
        let flag_last = 25 + 18usize.div_ceil(8) - 1;
        bytes[flag_last] |= 0x80;
        assert!(read_dump(&mut bytes.as_slice()).is_err());
    }
}

use alloc::vec::Vec;

use super::bits::full_mask;
use crate::{Error, Result};

/// All closed sets of a closure operator on `0..n`, in lectic order
/// (Ganter's NextClosure).
///
/// `closure` must be extensive, monotone and idempotent on masks below
/// `full_mask(n)`. Fails with a capacity error after `limit` closed sets.
pub fn closed_sets(n: usize, closure: impl Fn(u64) -> u64, limit: usize) -> Result<Vec<u64>> {
    let full = full_mask(n);
    let mut out = Vec::new();
    let mut current = closure(0);
    loop {
        if out.len() >= limit {
            return Err(Error::Capacity {
                what: "closed sets",
                needed: out.len() as u128 + 1,
                limit: limit as u128,
            });
        }
        out.push(current);
        if current == full {
            return Ok(out);
        }
        let mut advanced = false;
        for i in (0..n).rev() {
            let bit = 1u64 << i;
            if current & bit != 0 {
                continue;
            }
            let low = bit - 1;
            let candidate = closure((current & low) | bit);
            if candidate & low == current & low {
                current = candidate;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(out);
        }
    }
}

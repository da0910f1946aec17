use crate::error::{Error, Result};
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoolEntry {
    pub block: usize,
    pub consumed: usize,
    pub produced: usize,
}

/// FIFO store of shared secret bits with a per-block ledger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPool {
    bits: VecDeque<bool>,
    initial: usize,
    ledger: Vec<PoolEntry>,
}

impl KeyPool {
    pub fn new(initial: Vec<bool>) -> Self {
        KeyPool { initial: initial.len(), bits: initial.into(), ledger: Vec::new() }
    }

    pub fn available(&self) -> usize {
        self.bits.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn ledger(&self) -> &[PoolEntry] {
        &self.ledger
    }

    /// Removes the oldest `count` bits.
    pub fn take(&mut self, block: usize, count: usize) -> Result<Vec<bool>> {
        if count > self.bits.len() {
            return Err(Error::PoolUnderflow { needed: count, available: self.bits.len() });
        }
        self.ledger.push(PoolEntry { block, consumed: count, produced: 0 });
        Ok(self.bits.drain(..count).collect())
    }

    pub fn add(&mut self, block: usize, key: &[bool]) {
        self.ledger.push(PoolEntry { block, consumed: 0, produced: key.len() });
        self.bits.extend(key);
    }

    pub fn total_consumed(&self) -> usize {
        self.ledger.iter().map(|e| e.consumed).sum()
    }

    pub fn total_produced(&self) -> usize {
        self.ledger.iter().map(|e| e.produced).sum()
    }

    /// `initial + produced − consumed = available`.
    pub fn reconciles(&self) -> bool {
        self.initial + self.total_produced() == self.available() + self.total_consumed()
    }

    pub fn contents(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn take_and_add_keep_the_ledger_balanced() {
        let mut pool = KeyPool::new(vec![true, false, true, true]);
        assert_eq!(pool.take(0, 3).unwrap(), vec![true, false, true]);
        pool.add(0, &[false, false]);
        assert_eq!(pool.available(), 3);
        assert_eq!(pool.contents().collect::<Vec<_>>(), vec![true, false, false]);
        assert!(pool.reconciles());
        assert_eq!(pool.take(1, 4), Err(Error::PoolUnderflow { needed: 4, available: 3 }));
        assert!(pool.reconciles());
    }
}

use serde::Serialize;

use super::{PermError, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleClass {
    Cpeak,
    Cval,
    Cdrise,
    Cdfall,
    Fix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordClass {
    /// Exclusive record.
    Erec,
    /// Exclusive antirecord.
    Earec,
    /// Record-antirecord (pivot).
    Rar,
    /// Neither record nor antirecord.
    Nrar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_index(i: usize) -> Parity {
        if i % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Everything the statistics machinery knows about one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexProfile {
    pub index: usize,
    pub cycle_class: CycleClass,
    pub record_class: RecordClass,
    pub parity: Parity,
    pub ucross: usize,
    pub unest: usize,
    pub lcross: usize,
    pub lnest: usize,
    pub psnest: usize,
}

/// Computes the full profile of index `i` (1-based) in `sigma`.
pub fn profile(sigma: &Permutation, i: usize) -> Result<IndexProfile, PermError> {
    let n = sigma.len();
    if i < 1 || i > n {
        return Err(PermError::IndexError(i, n));
    }
    let si = sigma.apply(i);
    let pi = sigma.preimage(i);

    let cycle_class = if pi == i && si == i {
        CycleClass::Fix
    } else if pi < i && i > si {
        CycleClass::Cpeak
    } else if pi > i && i < si {
        CycleClass::Cval
    } else if pi < i && i < si {
        CycleClass::Cdrise
    } else {
        CycleClass::Cdfall
    };

    let record = (1..i).all(|j| sigma.apply(j) < si);
    let antirecord = ((i + 1)..=n).all(|j| sigma.apply(j) > si);
    let record_class = match (record, antirecord) {
        (true, true) => RecordClass::Rar,
        (true, false) => RecordClass::Erec,
        (false, true) => RecordClass::Earec,
        (false, false) => RecordClass::Nrar,
    };

    // Index-refined crossings and nestings.  The partner arcs are
    // determined, so each count is a single scan over the free index.
    let mut ucross = 0;
    let mut unest = 0;
    if si > i {
        // quadruplets i' < i < k < l with k = sigma(i'), l = sigma(i)
        for ip in 1..i {
            let k = sigma.apply(ip);
            if i < k && k < si {
                ucross += 1;
            }
        }
        // quadruplets i' < i < k < l with k = sigma(i), l = sigma(i')
        for ip in 1..i {
            if sigma.apply(ip) > si {
                unest += 1;
            }
        }
    }
    let mut lcross = 0;
    let mut lnest = 0;
    if si < i {
        // quadruplets i' < j < i < l with i' = sigma(i), j = sigma(l)
        for l in (i + 1)..=n {
            let j = sigma.apply(l);
            if si < j && j < i {
                lcross += 1;
            }
        }
        // quadruplets i' < j < i < l with i' = sigma(l), j = sigma(i)
        for l in (i + 1)..=n {
            if sigma.apply(l) < si {
                lnest += 1;
            }
        }
    }
    let mut psnest = 0;
    if cycle_class == CycleClass::Fix {
        for ip in 1..i {
            if sigma.apply(ip) > i {
                psnest += 1;
            }
        }
    }

    Ok(IndexProfile {
        index: i,
        cycle_class,
        record_class,
        parity: Parity::of_index(i),
        ucross,
        unest,
        lcross,
        lnest,
        psnest,
    })
}

/// Aggregate statistics of a permutation.
///
/// `rc[record][cycle][parity]` are the record-and-cycle category counts
/// split by index parity; the `*_refined` tables are totals of the
/// index-refined crossing/nesting statistics over indices of the given
/// cycle class and parity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatSummary {
    pub n: usize,
    /// [RecordClass][CycleClass][Parity], indexed by enum order
    /// (erec, earec, rar, nrar) x (cpeak, cval, cdrise, cdfall, fix) x
    /// (even, odd).
    pub rc: [[[usize; 2]; 5]; 4],
    /// [CycleClass][Parity] totals of ucross over indices of that class.
    pub ucross: [[usize; 2]; 5],
    pub unest: [[usize; 2]; 5],
    pub lcross: [[usize; 2]; 5],
    pub lnest: [[usize; 2]; 5],
    pub psnest: usize,
    pub cyc: usize,
    pub inv: usize,
}

fn ci(c: CycleClass) -> usize {
    match c {
        CycleClass::Cpeak => 0,
        CycleClass::Cval => 1,
        CycleClass::Cdrise => 2,
        CycleClass::Cdfall => 3,
        CycleClass::Fix => 4,
    }
}

fn ri(r: RecordClass) -> usize {
    match r {
        RecordClass::Erec => 0,
        RecordClass::Earec => 1,
        RecordClass::Rar => 2,
        RecordClass::Nrar => 3,
    }
}

fn pi(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

impl StatSummary {
    pub fn record_cycle(&self, r: RecordClass, c: CycleClass, p: Parity) -> usize {
        self.rc[ri(r)][ci(c)][pi(p)]
    }

    pub fn record_cycle_total(&self, r: RecordClass, c: CycleClass) -> usize {
        let row = self.rc[ri(r)][ci(c)];
        row[0] + row[1]
    }

    pub fn cycle_class_total(&self, c: CycleClass) -> usize {
        (0..4).map(|r| self.rc[r][ci(c)][0] + self.rc[r][ci(c)][1]).sum()
    }

    pub fn ucross_of(&self, c: CycleClass, p: Parity) -> usize {
        self.ucross[ci(c)][pi(p)]
    }

    pub fn unest_of(&self, c: CycleClass, p: Parity) -> usize {
        self.unest[ci(c)][pi(p)]
    }

    pub fn lcross_of(&self, c: CycleClass, p: Parity) -> usize {
        self.lcross[ci(c)][pi(p)]
    }

    pub fn lnest_of(&self, c: CycleClass, p: Parity) -> usize {
        self.lnest[ci(c)][pi(p)]
    }

    fn table_total(t: &[[usize; 2]; 5]) -> usize {
        t.iter().map(|r| r[0] + r[1]).sum()
    }

    pub fn ucross_total(&self) -> usize {
        Self::table_total(&self.ucross)
    }

    pub fn unest_total(&self) -> usize {
        Self::table_total(&self.unest)
    }

    pub fn lcross_total(&self) -> usize {
        Self::table_total(&self.lcross)
    }

    pub fn lnest_total(&self) -> usize {
        Self::table_total(&self.lnest)
    }

    /// Associative merge for partitioned enumeration.
    pub fn merge(&mut self, other: &StatSummary) {
        self.n += other.n;
        for r in 0..4 {
            for c in 0..5 {
                for p in 0..2 {
                    self.rc[r][c][p] += other.rc[r][c][p];
                }
            }
        }
        for c in 0..5 {
            for p in 0..2 {
                self.ucross[c][p] += other.ucross[c][p];
                self.unest[c][p] += other.unest[c][p];
                self.lcross[c][p] += other.lcross[c][p];
                self.lnest[c][p] += other.lnest[c][p];
            }
        }
        self.psnest += other.psnest;
        self.cyc += other.cyc;
        self.inv += other.inv;
    }
}

/// Sums per-index profiles; `inv` is computed both as a direct pair count
/// and through the crossing/nesting identity, which must agree.
pub fn summarize(sigma: &Permutation) -> StatSummary {
    let profiles = all_profiles(sigma);
    summarize_from(sigma, &profiles)
}

/// Profiles for every index of `sigma`.
pub fn all_profiles(sigma: &Permutation) -> Vec<IndexProfile> {
    (1..=sigma.len())
        .map(|i| profile(sigma, i).expect("index in range"))
        .collect()
}

/// Like [`summarize`], reusing already-computed profiles.
pub fn summarize_from(sigma: &Permutation, profiles: &[IndexProfile]) -> StatSummary {
    let mut s = StatSummary {
        n: sigma.len(),
        ..Default::default()
    };
    for p in profiles {
        s.rc[ri(p.record_class)][ci(p.cycle_class)][pi(p.parity)] += 1;
        let c = ci(p.cycle_class);
        let par = pi(p.parity);
        s.ucross[c][par] += p.ucross;
        s.unest[c][par] += p.unest;
        s.lcross[c][par] += p.lcross;
        s.lnest[c][par] += p.lnest;
        s.psnest += p.psnest;
    }
    s.cyc = sigma.cycle_count();
    s.inv = sigma.inversions();
    let by_identity = s.cycle_class_total(CycleClass::Cval)
        + s.cycle_class_total(CycleClass::Cdrise)
        + s.cycle_class_total(CycleClass::Cdfall)
        + s.ucross_total()
        + s.lcross_total()
        + 2 * (s.unest_total() + s.lnest_total() + s.psnest);
    assert_eq!(
        s.inv, by_identity,
        "inversion identity violated for {:?}",
        sigma.word()
    );
    s
}

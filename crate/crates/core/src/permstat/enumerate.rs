use super::Permutation;

/// Permutation classes the statistics are summed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermClass {
    All,
    /// No cycle double rises, cycle double falls, or fixed points.
    CycleAlternating,
    /// Cycle-alternating with exactly one cycle.
    AlternatingCycles,
}

/// Visits every member of the class exactly once, in lexicographic order
/// of the one-line word.  Alternating classes on odd `n` yield nothing.
pub fn for_each(class: PermClass, n: usize, mut visit: impl FnMut(&Permutation)) {
    match class {
        PermClass::All => {
            let mut word = Vec::with_capacity(n);
            let mut used = vec![false; n + 1];
            all_rec(n, &mut word, &mut used, &mut visit);
        }
        PermClass::CycleAlternating => {
            if n % 2 == 1 {
                return;
            }
            let mut st = CaState::new(n);
            ca_rec(&mut st, 1, &mut |w| visit(w));
        }
        PermClass::AlternatingCycles => {
            if n % 2 == 1 {
                return;
            }
            let mut st = CaState::new(n);
            ca_rec(&mut st, 1, &mut |w| {
                if w.cycle_count() == 1 {
                    visit(w);
                }
            });
        }
    }
}

/// Collects the class into a vector; intended for desk-scale `n`.
pub fn enumerate(class: PermClass, n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each(class, n, |p| out.push(p.clone()));
    out
}

fn all_rec(
    n: usize,
    word: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut impl FnMut(&Permutation),
) {
    if word.len() == n {
        let p = Permutation::from_word(word.clone()).expect("constructed bijectively");
        visit(&p);
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            word.push(v);
            all_rec(n, word, used, visit);
            word.pop();
            used[v] = false;
        }
    }
}

// Direct backtracking over one-line words for cycle-alternating
// permutations.  Every index must be a cycle valley or a cycle peak:
// sigma(i) > i iff sigma^{-1}(i) > i.  Assigning positions in increasing
// order, that invariant reads: position i maps down exactly when i was
// already hit from the left, and a value v < i may be used only when v
// mapped up.  This reaches 2n = 12 comfortably, unlike filtering S_{2n}.
struct CaState {
    n: usize,
    word: Vec<usize>,
    value_used: Vec<bool>,
    hit: Vec<bool>, // hit[v]: some j < current position maps to v
}

impl CaState {
    fn new(n: usize) -> Self {
        CaState {
            n,
            word: Vec::with_capacity(n),
            value_used: vec![false; n + 1],
            hit: vec![false; n + 2],
        }
    }
}

fn ca_rec(st: &mut CaState, i: usize, visit: &mut impl FnMut(&Permutation)) {
    if i > st.n {
        let p = Permutation::from_word(st.word.clone()).expect("constructed bijectively");
        visit(&p);
        return;
    }
    let must_descend = st.hit[i];
    let (lo, hi) = if must_descend { (1, i - 1) } else { (i + 1, st.n) };
    for v in lo..=hi {
        if st.value_used[v] {
            continue;
        }
        if v < i {
            // v is hit from above; v must have mapped up (cycle valley).
            if st.word[v - 1] < v {
                continue;
            }
        }
        st.value_used[v] = true;
        if v > i {
            st.hit[v] = true;
        }
        st.word.push(v);
        ca_rec(st, i + 1, visit);
        st.word.pop();
        if v > i {
            st.hit[v] = false;
        }
        st.value_used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstat::CycleClass;

    /// Filter oracle: cycle-alternating = no cdrise, no cdfall, no fix.
    fn is_cycle_alternating(p: &Permutation) -> bool {
        (1..=p.len()).all(|i| {
            let prof = crate::permstat::profile(p, i).unwrap();
            matches!(prof.cycle_class, CycleClass::Cpeak | CycleClass::Cval)
        })
    }

    #[test]
    fn n2_is_the_transposition() {
        let got = enumerate(PermClass::CycleAlternating, 2);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].word(), &[2, 1]);
    }

    #[test]
    fn backtracking_matches_filter_through_n8() {
        for n in [0usize, 2, 4, 6, 8] {
            let direct = enumerate(PermClass::CycleAlternating, n);
            let filtered: Vec<_> = enumerate(PermClass::All, n)
                .into_iter()
                .filter(is_cycle_alternating)
                .collect();
            assert_eq!(direct, filtered, "n={n}");
        }
    }

    #[test]
    fn derived_small_counts() {
        // 5 cycle-alternating permutations of [4] (computed by filtering all
        // 24 words of S_4), 16 alternating cycles on [6].
        assert_eq!(enumerate(PermClass::CycleAlternating, 4).len(), 5);
        assert_eq!(enumerate(PermClass::AlternatingCycles, 6).len(), 16);
    }

    #[test]
    fn odd_sizes_are_empty() {
        assert!(enumerate(PermClass::CycleAlternating, 3).is_empty());
        assert!(enumerate(PermClass::AlternatingCycles, 5).is_empty());
    }

    #[test]
    fn lexicographic_order() {
        let all = enumerate(PermClass::CycleAlternating, 6);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.word().cmp(b.word()));
        assert_eq!(all, sorted);
    }
}

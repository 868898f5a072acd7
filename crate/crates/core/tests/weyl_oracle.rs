use std::collections::{HashMap, VecDeque};

use schubres::weyl::{Permutation, WeylElementC};

/// Lengths in the hyperoctahedral group embedded in `S_2n`, by breadth-first search on
/// the simple reflections `(i,i+1)(2n-i,2n+1-i)` and `(n,n+1)`.
fn bfs_lengths(n: usize) -> HashMap<Vec<usize>, usize> {
    let m = 2 * n;
    let id: Vec<usize> = (1..=m).collect();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 1..=n {
            let mut next = w.clone();
            if i < n {
                next.swap(i - 1, i);
                next.swap(m - i - 1, m - i);
            } else {
                next.swap(n - 1, n);
            }
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

#[test]
fn length_c_matches_word_length() {
    for n in 1..=4 {
        let lengths = bfs_lengths(n);
        let order: usize = (1..=n).product::<usize>() << n;
        assert_eq!(lengths.len(), order);
        for (word, &len) in &lengths {
            let w = WeylElementC::from_full_word(&Permutation::new(word.clone()).unwrap()).unwrap();
            assert_eq!(w.length_c().unwrap(), len, "{word:?}");
        }
    }
}

#[test]
fn length_a_matches_word_length() {
    // S_4 with adjacent transpositions.
    let id: Vec<usize> = (1..=4).collect();
    let mut dist = HashMap::from([(id.clone(), 0usize)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..3 {
            let mut next = w.clone();
            next.swap(i, i + 1);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    assert_eq!(dist.len(), 24);
    for (word, len) in dist {
        assert_eq!(Permutation::new(word).unwrap().length(), len);
    }
}

//! Random diagrams for the oracle-agreement and round-trip checks.

use alloc::vec::Vec;

use rand::Rng;

use crate::webcat::{CrossDir, Diagram, Gen, Orient, Sense, Strand, WebObject};

fn sense<R: Rng>(rng: &mut R) -> Sense {
    if rng.gen_bool(0.5) {
        Sense::Over
    } else {
        Sense::Under
    }
}

/// Generators that can sit on the word at position `p` (consuming a
/// prefix of `word[p..]`), with a weight.
fn moves<R: Rng>(rng: &mut R, word: &[Strand], p: usize, cups: bool) -> Vec<(u32, Gen)> {
    let mut out = Vec::new();
    if cups {
        out.push((1, if rng.gen_bool(0.5) { Gen::CupL } else { Gen::CupR }));
    }
    if p + 1 < word.len() {
        let (a, b) = (word[p], word[p + 1]);
        if a.label == 1 && b.label == 1 {
            match (a.orient, b.orient) {
                (Orient::Down, Orient::Up) => out.push((4, Gen::CapL)),
                (Orient::Up, Orient::Down) => out.push((4, Gen::CapR)),
                (Orient::Up, Orient::Up) => out.push((3, Gen::MergeUp(1))),
                (Orient::Down, Orient::Down) => out.push((3, Gen::MergeDown(1))),
            }
            out.push((2, Gen::Cross(CrossDir::of(a.orient, b.orient), sense(rng))));
        }
    }
    if p < word.len() && word[p].label == 2 {
        out.push((3, if word[p].orient == Orient::Up { Gen::SplitUp(1) } else { Gen::SplitDown(1) }));
    }
    out
}

/// Puts `g` at position `p` of `word`, returning the layer.
fn place(word: &mut Vec<Strand>, p: usize, g: Gen) -> Vec<Gen> {
    let k = g.dom().len();
    let mut layer: Vec<Gen> = word[..p].iter().map(|&s| Gen::Id(s)).collect();
    layer.push(g);
    layer.extend(word[p + k..].iter().map(|&s| Gen::Id(s)));
    word.splice(p..p + k, g.cod());
    layer
}

fn pick<R: Rng>(rng: &mut R, opts: &[(usize, (u32, Gen))]) -> (usize, Gen) {
    let total: u32 = opts.iter().map(|(_, (w, _))| w).sum();
    let mut x = rng.gen_range(0..total);
    for &(p, (w, g)) in opts {
        if x < w {
            return (p, g);
        }
        x -= w;
    }
    unreachable!("weights cover the range")
}

/// A random closed diagram with at most `max_gens` non-identity generators,
/// thin crossings and labels at most 2, and at least `max_gens - 2`
/// generators.
pub fn random_closed<R: Rng>(rng: &mut R, max_gens: usize) -> Diagram {
    loop {
        let mut word: Vec<Strand> = Vec::new();
        let mut layers = Vec::new();
        for used in 0..max_gens {
            let left = max_gens - used;
            // every open strand needs at least half a cap, splits need more
            let cups = word.len() + 2 <= 2 * (left - 1);
            let mut opts = Vec::new();
            for p in 0..=word.len() {
                let here = cups && (p == word.len() || p == 0 || rng.gen_bool(0.3));
                for m in moves(rng, &word, p, here) {
                    opts.push((p, m));
                }
            }
            if opts.is_empty() {
                break;
            }
            let (p, g) = pick(rng, &opts);
            layers.push(place(&mut word, p, g));
            if word.is_empty() {
                // short closures are mostly circles; keep the interesting ones
                if layers.len() + 2 >= max_gens {
                    return Diagram::from_layers(WebObject::empty(), layers).expect("layers fit");
                }
                break;
            }
        }
    }
}

/// A random open web on a mixed word of one to three thin strands with up
/// to `max_gens` generators; caps and cups may change its boundary.
pub fn random_web<R: Rng>(rng: &mut R, max_gens: usize) -> Diagram {
    let len = rng.gen_range(1..=3);
    let dom: Vec<Strand> = (0..len).map(|_| if rng.gen_bool(0.5) { Strand::up(1) } else { Strand::down(1) }).collect();
    let mut word = dom.clone();
    let mut layers = Vec::new();
    let count = rng.gen_range(1..=max_gens);
    for _ in 0..count {
        let mut opts = Vec::new();
        for p in 0..=word.len() {
            let cups = word.len() < 4 && rng.gen_bool(0.3);
            for m in moves(rng, &word, p, cups) {
                opts.push((p, m));
            }
        }
        if opts.is_empty() {
            break;
        }
        let (p, g) = pick(rng, &opts);
        layers.push(place(&mut word, p, g));
    }
    Diagram::from_layers(WebObject::new(dom), layers).expect("layers fit")
}

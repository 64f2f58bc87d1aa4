use isla_core::operators::crossover_at;
use isla_core::prelude::*;
use proptest::prelude::*;

fn genome_strategy(max_len: usize) -> impl Strategy<Value = BitGenome> {
    prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(|b| BitGenome::new(b).unwrap())
}

fn pair_strategy(max_len: usize) -> impl Strategy<Value = (BitGenome, BitGenome)> {
    (2..=max_len).prop_flat_map(|len| {
        (
            prop::collection::vec(any::<bool>(), len),
            prop::collection::vec(any::<bool>(), len),
        )
            .prop_map(|(a, b)| (BitGenome::new(a).unwrap(), BitGenome::new(b).unwrap()))
    })
}

fn chunk_value(bits: &[bool]) -> u64 {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
}

proptest! {
    #[test]
    fn decode_is_monotone_in_chunk_value(
        (gene_bits, bits) in (1usize..=16, 1usize..=4).prop_flat_map(|(gb, genes)| {
            (Just(gb), prop::collection::vec(any::<bool>(), gb * genes))
        }),
        min in -1e3f64..1e3,
        span in 1e-3f64..1e3,
    ) {
        let genome = BitGenome::new(bits).unwrap();
        let max = min + span;
        prop_assume!(min < max);
        let values = decode(&genome, gene_bits, min, max).unwrap();
        let chunks: Vec<u64> = genome.bits().chunks(gene_bits).map(chunk_value).collect();
        for (i, &vi) in values.iter().enumerate() {
            prop_assert!(vi >= min && vi <= max);
            for (j, &vj) in values.iter().enumerate() {
                if chunks[i] <= chunks[j] {
                    prop_assert!(vi <= vj);
                }
            }
        }
    }

    #[test]
    fn variation_preserves_length((a, b) in pair_strategy(48), seed in any::<u64>()) {
        let mut rng = RandomSource::new(seed);
        let flips = 1 + rng.below(a.len());
        let m = bitflip(&a, flips, &mut rng).unwrap();
        prop_assert_eq!(m.len(), a.len());
        prop_assert_eq!(hamming(&a, &m).unwrap(), flips);
        let points = 1 + rng.below(a.len() - 1);
        let c = n_point_crossover(&a, &b, points, &mut rng).unwrap();
        prop_assert_eq!(c.len(), a.len());
        for i in 0..a.len() {
            prop_assert!(c.get(i) == a.get(i) || c.get(i) == b.get(i));
        }
    }

    #[test]
    fn hamming_is_a_metric((a, b) in pair_strategy(40), c_bits in prop::collection::vec(any::<bool>(), 40)) {
        let c = BitGenome::new(c_bits[..a.len()].to_vec()).unwrap();
        let ab = hamming(&a, &b).unwrap();
        prop_assert_eq!(ab, hamming(&b, &a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(ab <= hamming(&a, &c).unwrap() + hamming(&c, &b).unwrap());
    }

    #[test]
    fn same_seed_same_offspring((a, b) in pair_strategy(32), seed in any::<u64>()) {
        let run = || {
            let mut rng = RandomSource::new(seed);
            let g = random_genome(a.len(), &mut rng).unwrap();
            let m = bitflip(&a, 1, &mut rng).unwrap();
            let c = n_point_crossover(&a, &b, 1, &mut rng).unwrap();
            (g, m, c)
        };
        prop_assert_eq!(run(), run());
    }

    #[test]
    fn onemax_complement_sums_to_length(g in genome_strategy(128)) {
        prop_assert_eq!(onemax(&g) + onemax(&g.complement()), g.len());
    }

    #[test]
    fn royal_road_bounded_by_onemax(
        (block, bits) in (1usize..=8, 1usize..=12).prop_flat_map(|(b, n)| {
            (Just(b), prop::collection::vec(any::<bool>(), b * n))
        }),
    ) {
        let g = BitGenome::new(bits).unwrap();
        let rr = royal_road(&g, block).unwrap();
        prop_assert!(rr * block <= onemax(&g));
    }

    #[test]
    fn indexed_query_matches_brute_force(
        rects in prop::collection::vec((0.0f64..20.0, 0.0f64..20.0, 0.0f64..8.0, 0.0f64..8.0), 0..60),
        dots in prop::collection::vec((-1.0f64..30.0, -1.0f64..30.0), 1..40),
    ) {
        let rects: Vec<Rectangle> = rects
            .iter()
            .enumerate()
            .map(|(i, &(x, y, w, h))| Rectangle::new(format!("r{i}"), x, y, x + w, y + h).unwrap())
            .collect();
        let corners: Vec<(f64, f64)> = rects.iter().flat_map(|r| [(r.x0, r.y0), (r.x1, r.y1)]).collect();
        let arena = RectangleArena::new(20.0, rects).unwrap();
        for &(x, y) in dots.iter().chain(&corners) {
            let indexed = arena.rectangles_containing_dot(x, y);
            prop_assert_eq!(indexed.len(), arena.count_containing(x, y));
            prop_assert_eq!(indexed, arena.rectangles_containing_dot_brute(x, y));
        }
    }

    #[test]
    fn arena_text_round_trip(seed in any::<u64>(), num_rects in 1usize..40) {
        let cfg = DotProblemConfig { num_rects, ..Default::default() };
        let arena = generate_random_arena(&cfg, &mut RandomSource::new(seed)).unwrap();
        let back = RectangleArena::from_text(&arena.to_text(), cfg.arena_side).unwrap();
        prop_assert_eq!(back.rectangles(), arena.rectangles());
    }
}

#[test]
fn crossover_mask_exhaustive_8_bit() {
    let genome = |v: u32| BitGenome::new((0..8).rev().map(|k| (v >> k) & 1 == 1).collect()).unwrap();
    let cut_sets: Vec<Vec<usize>> = (1u32..(1 << 7))
        .step_by(5)
        .map(|mask| (1..8).filter(|c| mask & (1 << (c - 1)) != 0).collect())
        .collect();
    for x in 0..256 {
        let a = genome(x);
        for y in (0..256).step_by(3) {
            let b = genome(y);
            for cuts in &cut_sets {
                let child = crossover_at(&a, &b, cuts).unwrap();
                for i in 0..8 {
                    assert!(child.get(i) == a.get(i) || child.get(i) == b.get(i));
                }
                // before the first cut the child copies parent a
                for i in 0..cuts[0] {
                    assert_eq!(child.get(i), a.get(i));
                }
            }
        }
    }
}

#[test]
fn seeded_grid_oracle_regression() {
    let mut rng = RandomSource::new(2009);
    let arena = generate_random_arena(&DotProblemConfig::default(), &mut rng).unwrap();
    let (count, (x, y)) = grid_oracle(&arena, 200).unwrap();
    // frozen from the first run of this oracle
    assert_eq!(count, FROZEN_GRID_BEST);
    assert_eq!(arena.rectangles_containing_dot_brute(x, y).len(), count);
    assert!((0.0..=10.0).contains(&x) && (0.0..=10.0).contains(&y));
}

const FROZEN_GRID_BEST: usize = 9;

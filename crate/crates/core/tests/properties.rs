mod common;

use std::collections::BTreeSet;

use brickforge::dsl::{compile_brickfn, compile_predicate, eval, parse, typecheck, ExprType, Value};
use brickforge::gallery::{self, SierpinskiParams};
use brickforge::io::{emit_bvox, parse_bvox};
use brickforge::setops::{complement_show, difference_show, intersection_show, slide_show, union_show};
use brickforge::traversal::{predicate_show, traverse_within};
use brickforge::{Brick, BrickFunction, Point, VirtualSpace};
use common::{cells, pascal_oracle, random_brickfn, rng, shape_predicate, ExprGen};
use proptest::prelude::*;

fn occupied(s: &VirtualSpace) -> BTreeSet<Point> {
    s.occupied().map(|(p, _)| p).collect()
}

fn brick() -> impl Strategy<Value = Brick> {
    prop::sample::select(Brick::ALL.to_vec())
}

fn random_space() -> impl Strategy<Value = VirtualSpace> {
    (1usize..6, 1usize..6, 1usize..6).prop_flat_map(|(x, y, z)| {
        prop::collection::vec(brick(), x * y * z).prop_map(move |bricks| {
            let mut s = VirtualSpace::new(x, y, z).unwrap();
            let mut it = bricks.into_iter();
            for (p, _) in s.clone().cells() {
                s.update(it.next().unwrap(), p).unwrap();
            }
            s
        })
    })
}

#[test]
fn sierpinski_matches_pascal_for_every_size() {
    for m in 1..=6 {
        let n = (1 << m) + 1;
        let got = cells(&gallery::sierpinski(SierpinskiParams::new(n)).unwrap());
        assert_eq!(got, pascal_oracle(n, Brick::Blue, Brick::Red), "n = {n}");
    }
    for n in [0, 1, 2, 4, 6, 7, 10, 16, 32, 34] {
        assert!(gallery::sierpinski(SierpinskiParams::new(n)).is_err(), "n = {n}");
    }
}

#[test]
fn sierpinski_custom_colors() {
    let params = SierpinskiParams {
        n: 17,
        even_brick: Brick::White,
        odd_brick: Brick::DarkGreen,
    };
    let got = cells(&gallery::sierpinski(params).unwrap());
    assert_eq!(got, pascal_oracle(17, Brick::DarkGreen, Brick::White));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn de_morgan_and_complement(seed in any::<u64>(), n in 1usize..9) {
        let mut r = rng(seed);
        let (ea, eb) = (shape_predicate(&mut r), shape_predicate(&mut r));
        let a = compile_predicate(&ea.to_string()).unwrap();
        let b = compile_predicate(&eb.to_string()).unwrap();
        let bl = Brick::Blue;

        let not_a = occupied(&complement_show(n, &a, bl).unwrap());
        let not_b = occupied(&complement_show(n, &b, bl).unwrap());
        let union = occupied(&union_show(n, &a, bl, &b, Brick::Yellow, Brick::Green).unwrap());
        let inter = occupied(&intersection_show(n, &a, &b, bl).unwrap());
        let everything: BTreeSet<Point> = common::all_points(n).collect();

        let not_union: BTreeSet<Point> = everything.difference(&union).copied().collect();
        let not_inter: BTreeSet<Point> = everything.difference(&inter).copied().collect();
        prop_assert_eq!(not_union, not_a.intersection(&not_b).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(not_inter, not_a.union(&not_b).copied().collect::<BTreeSet<_>>());

        // complement of the complement
        let in_a = occupied(&predicate_show(n, &a, bl).unwrap());
        let back = occupied(&complement_show(n, &|p: Point| not_a.contains(&p), bl).unwrap());
        prop_assert_eq!(back, in_a.clone());

        // A - B = A and not B
        let diff = occupied(&difference_show(n, &a, &b, bl).unwrap());
        prop_assert_eq!(diff, in_a.intersection(&not_b).copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn slide_show_frames_grow(seed in any::<u64>(), n in 1usize..8) {
        let mut r = rng(seed);
        let e = shape_predicate(&mut r);
        let pred = compile_predicate(&e.to_string()).unwrap();
        let frames = slide_show(n, &pred, Brick::Red).unwrap();
        prop_assert_eq!(frames.len(), n);
        for w in frames.windows(2) {
            prop_assert!(occupied(&w[0]).is_subset(&occupied(&w[1])));
        }
        prop_assert_eq!(frames.last().unwrap(), &predicate_show(n, &pred, Brick::Red).unwrap());
    }

    #[test]
    fn bvox_round_trip(space in random_space()) {
        let text = emit_bvox(&space);
        let back = parse_bvox(&text).unwrap();
        prop_assert_eq!(emit_bvox(&back), text);
        prop_assert_eq!(back, space);
    }

    #[test]
    fn overlay_top_wins(a in random_space(), b in brick()) {
        let mut top = VirtualSpace::with_dims(a.dims()).unwrap();
        top.update(b, Point::ORIGIN).unwrap();
        let out = a.overlay(&top).unwrap();
        for (p, c) in out.cells() {
            let want = if p == Point::ORIGIN && !b.is_empty() { b } else { a.access(p).unwrap() };
            prop_assert_eq!(c, want);
        }
        prop_assert_eq!(a.overlay(&VirtualSpace::with_dims(a.dims()).unwrap()).unwrap(), a);
    }

    #[test]
    fn traversal_box_matches_reversed(seed in any::<u64>(), start in random_space(),
                                     lo in (0i32..5, 0i32..5, 0i32..5), ext in (0i32..5, 0i32..5, 0i32..5)) {
        let mut r = rng(seed);
        let f = compile_brickfn(&random_brickfn(&mut r, 3).to_string()).unwrap();
        let d = start.dims();
        let lo = Point::new(lo.0 % d.x as i32, lo.1 % d.y as i32, lo.2 % d.z as i32);
        let hi = Point::new(
            (lo.x + ext.0).min(d.x as i32 - 1),
            (lo.y + ext.1).min(d.y as i32 - 1),
            (lo.z + ext.2).min(d.z as i32 - 1),
        );
        let mut forward = start.clone();
        traverse_within(&mut forward, lo, hi, &f).unwrap();

        let mut reversed = start.clone();
        for x in (lo.x..=hi.x).rev() {
            for y in (lo.y..=hi.y).rev() {
                for z in (lo.z..=hi.z).rev() {
                    let p = Point::new(x, y, z);
                    let b = f.brick_at(p).unwrap();
                    if !b.is_empty() {
                        reversed.update(b, p).unwrap();
                    }
                }
            }
        }
        prop_assert_eq!(&forward, &reversed);
        // nothing outside the box moved
        for (p, c) in forward.cells() {
            let inside = (lo.x..=hi.x).contains(&p.x) && (lo.y..=hi.y).contains(&p.y) && (lo.z..=hi.z).contains(&p.z);
            if !inside {
                prop_assert_eq!(c, start.access(p).unwrap());
            }
        }
    }

    #[test]
    fn generated_programs_typecheck_and_round_trip(seed in any::<u64>(), depth in 0u32..6) {
        let mut r = rng(seed);
        for ty in [ExprType::Bool, ExprType::Int, ExprType::Float, ExprType::Brick] {
            let e = ExprGen::new(&mut r).gen(ty, depth);
            prop_assert_eq!(typecheck(&e).unwrap(), ty);
            let printed = e.to_string();
            let back = parse(&printed).unwrap();
            prop_assert_eq!(back.to_string(), printed);
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn div_mod_floor(a in -1000i64..1000, b in -50i64..50, x in -20i32..20) {
        prop_assume!(b != 0);
        let src = format!("let a = x + {} in (a div {}) * {} + a mod {}", lit(a), lit(b), lit(b), lit(b));
        let got = eval(&parse(&src).unwrap(), Point::new(x, 0, 0)).unwrap();
        prop_assert_eq!(got, Value::Int(a + i64::from(x)));
        let m = eval(&parse(&format!("{} mod {}", lit(a), lit(b))).unwrap(), Point::ORIGIN).unwrap();
        let Value::Int(m) = m else { panic!("mod gave {m:?}") };
        // result takes the divisor's sign
        prop_assert!(m == 0 || (m > 0) == (b > 0));
        prop_assert!(m.abs() < b.abs());
    }
}

fn lit(v: i64) -> String {
    if v < 0 {
        format!("~{}", v.unsigned_abs())
    } else {
        v.to_string()
    }
}

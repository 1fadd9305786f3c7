//! Self-checks bundled by `ordplane verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordplane_core::configs::random_rational_config;
use ordplane_core::counting::{ordinary_lines_2d, plane_histogram};
use ordplane_core::geom::{are_coplanar, project_all};
use ordplane_core::quartic::{
    catalecticant, classify_species, fundamental_quartic, group_parametrization, rsz_identity_check, species, Param,
    QuarticCurve,
};
use ordplane_core::rational::int;
use ordplane_core::Rational;

pub const SUITES: [&str; 6] = ["coplanar", "species", "sl2", "identity", "group", "projection"];

pub struct Outcome {
    pub suite: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

fn random_param(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=6).into())
}

fn random_curve(rng: &mut ChaCha8Rng) -> QuarticCurve {
    loop {
        let c = [0; 4].map(|_| small(rng, 6));
        if let Ok(curve) = QuarticCurve::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()) {
            return curve;
        }
    }
}

/// A curve with vanishing catalecticant: p solved from q, r, s.
fn first_species_curve(rng: &mut ChaCha8Rng) -> QuarticCurve {
    loop {
        let (q, r, s) = (small(rng, 5), small(rng, 5), small(rng, 5));
        let denom = &r - &s * &s;
        if denom == int(0) {
            continue;
        }
        let p = (&q * &q - int(2) * &q * &r * &s + &r * &r * &r) / denom;
        if let Ok(curve) = QuarticCurve::new(p, q, r, s) {
            return curve;
        }
    }
}

fn coplanar(rng: &mut ChaCha8Rng) -> Outcome {
    let total = 1000;
    let mut passed = 0;
    let mut done = 0;
    while done < total {
        let curve = random_curve(rng);
        let t: Vec<Rational> = (0..3).map(|_| random_param(rng)).collect();
        let t4 = if done % 2 == 0 {
            match curve.solve_t4(&t[0], &t[1], &t[2]) {
                Ok(Param::Finite(x)) => x,
                _ => continue,
            }
        } else {
            random_param(rng)
        };
        let all = [&t[0], &t[1], &t[2], &t4];
        if (0..4).any(|i| (i + 1..4).any(|j| all[i] == all[j])) {
            continue;
        }
        let pts = all.map(|x| curve.point_at(&Param::Finite(x.clone())));
        let by_form = curve.coplanarity_form(all) == int(0);
        if by_form == are_coplanar(&pts[0], &pts[1], &pts[2], &pts[3]) {
            passed += 1;
        }
        done += 1;
    }
    Outcome { suite: "coplanar", passed, total }
}

fn species_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut curves: Vec<QuarticCurve> = (0..100).map(|_| random_curve(rng)).collect();
    curves.extend((0..20).map(|_| first_species_curve(rng)));
    let passed = curves
        .iter()
        .filter(|c| {
            let report = classify_species(c);
            report.consistent() && report.pencil_basis.iter().all(|a| species::contains_curve(a, c))
        })
        .count();
    Outcome { suite: "species", passed, total: curves.len() }
}

fn sl2(rng: &mut ChaCha8Rng) -> Outcome {
    let total = 100;
    let mut passed = 0;
    for _ in 0..total {
        let bq = fundamental_quartic(&random_curve(rng));
        // Product of elementary shears has determinant 1.
        let (mut a, mut b, mut c, mut d) = (int(1), int(0), int(0), int(1));
        for step in 0..4 {
            let k = small(rng, 3);
            if step % 2 == 0 {
                b = &a * &k + &b;
                d = &c * &k + &d;
            } else {
                a = &a + &b * &k;
                c = &c + &d * &k;
            }
        }
        if catalecticant(&bq.substitute(&a, &b, &c, &d)) == catalecticant(&bq) {
            passed += 1;
        }
    }
    Outcome { suite: "sl2", passed, total }
}

fn identity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut passed = 0;
    let mut total = 0;
    for _ in 0..20 {
        let curve = random_curve(rng);
        let mut samples = 0;
        while samples < 5 {
            let t = [0; 3].map(|_| random_param(rng));
            match rsz_identity_check(&curve, &t[0], &t[1], &t[2]) {
                Ok(ok) => {
                    total += 1;
                    samples += 1;
                    passed += ok as usize;
                }
                Err(_) => continue,
            }
        }
    }
    Outcome { suite: "identity", passed, total }
}

fn group(rng: &mut ChaCha8Rng) -> Outcome {
    let mut curves = vec![QuarticCurve::from_ints(-1, 0, 0, 0).unwrap(), QuarticCurve::from_ints(0, 0, 0, 1).unwrap()];
    curves.extend((0..18).map(|_| first_species_curve(rng)));
    let passed = curves.iter().filter(|c| group_parametrization(c).is_ok()).count();
    Outcome { suite: "group", passed, total: curves.len() }
}

fn projection(rng: &mut ChaCha8Rng) -> Outcome {
    let mut passed = 0;
    let mut total = 0;
    for _ in 0..3 {
        let cfg = random_rational_config(12, rng.gen(), 20).expect("bound 20 fits 12 points");
        let pts = cfg.exact_points().expect("exact family");
        let hist = plane_histogram(pts).expect("general position");
        for (i, p) in pts.iter().enumerate() {
            let rest: Vec<_> = pts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            total += 1;
            let lines = project_all(p, &rest).and_then(|(img, _)| ordinary_lines_2d(&img));
            if lines.is_ok_and(|l| l == hist.ordinary_planes_through(i)) {
                passed += 1;
            }
        }
    }
    Outcome { suite: "projection", passed, total }
}

pub fn run(name: &str, seed: u64) -> Option<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Some(match name {
        "coplanar" => coplanar(&mut rng),
        "species" => species_suite(&mut rng),
        "sl2" => sl2(&mut rng),
        "identity" => identity(&mut rng),
        "group" => group(&mut rng),
        "projection" => projection(&mut rng),
        _ => return None,
    })
}

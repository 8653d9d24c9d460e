use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use veronese_core::simplicial::{check_edgewise_hilbert, edgewise};
use veronese_core::SimplicialComplex;

fn complex(facets: Vec<Vec<u32>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets)
}

fn simplex(n: u32) -> SimplicialComplex {
    complex(vec![(1..=n).collect()])
}

fn boundary(n: u32) -> SimplicialComplex {
    complex((1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect()).collect())
}

fn path(n: u32) -> SimplicialComplex {
    complex((1..n).map(|v| vec![v, v + 1]).collect())
}

fn cycle(n: u32) -> SimplicialComplex {
    complex((1..=n).map(|v| vec![v, v % n + 1]).collect())
}

fn random_complex(rng: &mut ChaCha8Rng, n: u32) -> SimplicialComplex {
    let count = rng.gen_range(1..=5);
    let faces: Vec<Vec<u32>> = (0..count)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    complex(faces)
}

fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("simplex{n}"), simplex(n)));
    }
    out.push(("triangle-boundary".into(), boundary(3)));
    out.push(("tetrahedron-boundary".into(), boundary(4)));
    for n in 2..=5 {
        out.push((format!("path{n}"), path(n)));
    }
    for n in 3..=6 {
        out.push((format!("cycle{n}"), cycle(n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..20 {
        let c = random_complex(&mut rng, 5);
        if c.dim() >= 0 {
            out.push((format!("random{i}"), c));
        }
    }
    out
}

#[test]
fn hilbert_identity_on_corpus() {
    for (name, c) in corpus() {
        for r in 1..=4 {
            let check = check_edgewise_hilbert(&c, r).unwrap();
            assert!(check.pass(), "{name} r={r}: {check:?}");
        }
    }
}

/// Counts grid points of level `r` whose support is a face, by scanning
/// all of `{0..=r}^n`.
fn supported_points(c: &SimplicialComplex, r: u32) -> usize {
    let verts = c.vertices();
    let n = verts.len() as u32;
    let mut count = 0;
    for code in 0..(r + 1).pow(n) {
        let coords: Vec<u32> = (0..n).map(|i| code / (r + 1).pow(i) % (r + 1)).collect();
        if coords.iter().sum::<u32>() != r {
            continue;
        }
        let support: Vec<u32> = (0..n as usize).filter(|&i| coords[i] > 0).map(|i| verts[i]).collect();
        if c.contains_face(&support) {
            count += 1;
        }
    }
    count
}

fn is_pure(c: &SimplicialComplex) -> bool {
    let d = c.dim();
    c.facets().all(|f| f.len() as isize == d + 1)
}

#[test]
fn subdivision_face_counts() {
    for (name, c) in corpus() {
        let f = c.f_vector().unwrap();
        for r in 1..=4u32 {
            let sub = edgewise(&c, r as usize).unwrap();
            let fs = sub.complex.f_vector().unwrap();
            assert_eq!(sub.complex.dim(), c.dim(), "{name} r={r}");
            assert_eq!(fs.entries()[1], BigInt::from(supported_points(&c, r)), "{name} r={r}");
            assert_eq!(sub.points.len(), supported_points(&c, r), "{name} r={r}");
            if is_pure(&c) {
                let d = c.dim() as u32 + 1;
                let top = f.entries().last().unwrap() * BigInt::from(r).pow(d - 1);
                assert_eq!(fs.entries().last().unwrap(), &top, "{name} r={r}");
            }
            for p in &sub.points {
                assert_eq!(p.level(), r as u64);
            }
        }
    }
}

#[test]
fn points_print_as_colon_tuples() {
    let sub = edgewise(&boundary(3), 2).unwrap();
    let printed: Vec<Vec<String>> = sub
        .facet_points()
        .iter()
        .map(|f| f.iter().map(|p| p.to_string()).collect())
        .collect();
    assert_eq!(printed.len(), 6);
    assert!(printed.iter().flatten().all(|s| s.split(':').count() == 3));
    assert!(printed.contains(&vec!["2:0:0".to_string(), "1:1:0".to_string()]));
}

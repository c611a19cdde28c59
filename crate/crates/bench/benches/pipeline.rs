use a2web::growth::{dim_inv, enumerate_diagrams, TypeWord};
use a2web::hulls::{conv, induced_complex, VertexSet};
use a2web::series::{Fp, DEFAULT_PRIME};
use a2web::synthesis::{diskoid_from_diagram, realize_polygon};
use a2web::webs::{dualize, reduce};
use a2web_bench::{diagrams, octagon};
use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn counting(c: &mut Criterion) {
    let words: Vec<TypeWord> = TypeWord::all_of_length(8);
    c.bench_function("enumerate all words of length 8", |b| {
        b.iter(|| words.iter().map(|w| enumerate_diagrams(w).unwrap().len()).sum::<usize>())
    });
    c.bench_function("dim_inv all words of length 8", |b| b.iter(|| words.iter().map(dim_inv).sum::<u64>()));
}

fn synthesis(c: &mut Criterion) {
    let ds = diagrams("12121212");
    c.bench_function("diskoids and webs of 12121212", |b| {
        b.iter(|| ds.iter().map(|d| dualize(&diskoid_from_diagram(d).unwrap()).unwrap()).collect::<Vec<_>>())
    });
    let octagon_diagram = ds[8].clone();
    c.bench_function("realize the octagon over Fp", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        b.iter(|| realize_polygon::<Fp, _>(black_box(&octagon_diagram), &DEFAULT_PRIME, &mut rng, 1000).unwrap())
    });
}

fn hulls(c: &mut Criterion) {
    let seed: VertexSet<_> = octagon().into_iter().collect();
    c.bench_function("conv of the octagon", |b| b.iter(|| induced_complex(&conv(black_box(&seed)).unwrap())));
}

fn reduction(c: &mut Criterion) {
    let web = dualize(&diskoid_from_diagram(&diagrams("11221122")[0]).unwrap()).unwrap();
    let mut elliptic = web.clone();
    for d in [0, 5, 11, 3] {
        elliptic = elliptic.insert_bigon(d % elliptic.darts().len()).unwrap();
    }
    c.bench_function("reduce a web with four bigons", |b| b.iter(|| reduce(black_box(&elliptic))));
}

criterion_group!(benches, counting, synthesis, hulls, reduction);
criterion_main!(benches);

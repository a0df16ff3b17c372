//! Acceptance checks. Each criterion prints one PASS/FAIL line with its
//! runtime and budget; the process exits nonzero if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrep::codes::{x_degree, CodeSet};
use wordrep::feinj::{
    classify_binary, classify_general, highpower_word, lowpower_morphism, pump_witness, VerdictTag,
};
use wordrep::infinite::{
    ace_estimate, factor_complexity, optimal_binary_generator, periodic_generator, BigAcei,
    OptimalBinary, WordGenerator,
};
use wordrep::morphism::enumerate_injective;
use wordrep::word_core::{
    exponent_of, is_primitive, prefix_comparable, suffix_comparable, Alphabet, Rational, Word,
};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn all_words(letters: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in letters {
                let mut v: Vec<u8> = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word(bytes: &[u8]) -> Word {
    Word::from_letters(bytes.to_vec()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for n in 2..=10 {
        for k in 0..=50 {
            let inst = lowpower_morphism(n, k).map_err(|e| e.to_string())?;
            let image = inst.morphism.apply(&inst.word).unwrap();
            let expected = r(1, 1) + r(4 * k as i64 + 4, (2 * k as i64 + 3) * (n as i64 - 1) + 2);
            let got = exponent_of(image.as_bytes());
            if got != expected || inst.expected != expected {
                return Err(format!("n={n} k={k}: got {got}, expected {expected}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs exact"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for n in 2..=4usize {
        let w = Word::parse(&format!("{}ba", "ab".repeat(n))).unwrap();
        let bound = r(1, 1) + r(2, n as i64 - 1);
        let mut best = Rational::from_integer(0);
        for h in enumerate_injective(w.letters_used(), Alphabet::binary(), 4).unwrap() {
            let e = exponent_of(h.apply(&w).unwrap().as_bytes());
            if e >= bound {
                return Err(format!("n={n}: {h} reaches {e} >= {bound}"));
            }
            best = best.max(e);
            checked += 1;
        }
        if best == Rational::from_integer(0) {
            return Err(format!("n={n}: no morphisms enumerated"));
        }
    }
    Ok(format!("{checked} injective morphisms below 1 + 2/(n-1)"))
}

fn criterion_3() -> Outcome {
    for n in 2..=20usize {
        let inst = highpower_word(n).map_err(|e| e.to_string())?;
        let expected = r(n as i64, 1) - r(n as i64, 6 * n as i64 + 1);
        let got = exponent_of(inst.morphism.apply(&inst.word).unwrap().as_bytes());
        if got != expected {
            return Err(format!("n={n}: image exponent {got}, expected {expected}"));
        }
        let own = exponent_of(inst.word.as_bytes());
        if own != Rational::from_integer(1) {
            return Err(format!("n={n}: E(w_n) = {own}"));
        }
    }
    Ok("n = 2..20 exact".into())
}

/// Every word `y^j1 (x y^j2)^k x y^j3` of length at most `max_len`, for both
/// choices of `x`.
fn binary_pattern_words(max_len: usize) -> HashSet<Vec<u8>> {
    let mut out = HashSet::new();
    for (x, y) in [(b'a', b'b'), (b'b', b'a')] {
        for k in 0..max_len {
            for j2 in 0..max_len {
                let core = (k + 1) + k * j2;
                if core > max_len {
                    break;
                }
                for j1 in 0..=max_len - core {
                    for j3 in 0..=max_len - core - j1 {
                        let mut w = vec![y; j1];
                        for _ in 0..k {
                            w.push(x);
                            w.extend(std::iter::repeat_n(y, j2));
                        }
                        w.push(x);
                        w.extend(std::iter::repeat_n(y, j3));
                        out.insert(w);
                    }
                }
            }
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let patterns = binary_pattern_words(12);
    let words = all_words(b"ab", 12);
    let mut checked = 0;
    for w in words.iter().filter(|w| !w.is_empty()) {
        let verdict = classify_binary(&word(w)).map_err(|e| e.to_string())?;
        let expected = if patterns.contains(w) {
            VerdictTag::Infinite
        } else {
            VerdictTag::Finite
        };
        if verdict.tag != expected {
            return Err(format!(
                "{}: classified {}, pattern says {expected}",
                String::from_utf8_lossy(w),
                verdict.tag
            ));
        }
        checked += 1;
    }
    if checked != (1 << 13) - 2 {
        return Err(format!("checked {checked} words"));
    }
    Ok(format!("{checked} binary words agree"))
}

fn criterion_5() -> Outcome {
    let targets = [2, 5, 10].map(Rational::from_integer);
    let mut infinite = 0;
    let mut unknown = 0;
    for w in all_words(b"abc", 8).iter().filter(|w| !w.is_empty()) {
        let w = word(w);
        let verdict = classify_general(&w, 3).map_err(|e| e.to_string())?;
        match verdict.tag {
            VerdictTag::Infinite => infinite += 1,
            VerdictTag::Unknown => {
                unknown += 1;
                continue;
            }
            VerdictTag::Finite => continue,
        }
        let fact = verdict
            .certificate
            .as_ref()
            .ok_or("Infinite without certificate")?;
        let base = verdict
            .base
            .as_ref()
            .ok_or("Infinite without base morphism")?;
        for &t in &targets {
            let pumped = pump_witness(&w, fact, base, t).map_err(|e| format!("{w}: {e}"))?;
            let e = exponent_of(pumped.morphism.apply(&w).unwrap().as_bytes());
            if e < t || e != pumped.exponent {
                return Err(format!("{w}: target {t}, achieved {e}"));
            }
            if !pumped.morphism.is_injective().unwrap() {
                return Err(format!("{w}: {} is not injective", pumped.morphism));
            }
        }
    }
    Ok(format!(
        "{infinite} Infinite words pumped to 2, 5, 10 ({unknown} Unknown at bound 3)"
    ))
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| if rng.random_bool(0.5) { b'a' } else { b'b' })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut instances = 0;
    let mut worst = 0;
    while instances < 200 {
        let size = rng.random_range(1..=3);
        let words: HashSet<Vec<u8>> = (0..size)
            .map(|_| {
                let len = rng.random_range(1..=3);
                random_word(&mut rng, len)
            })
            .collect();
        let code = CodeSet::new(words.into_iter().map(|w| word(&w))).unwrap();
        if !code.is_code().unwrap() {
            continue;
        }
        let len = rng.random_range(code.max_len() + 1..=code.max_len() + 4);
        let x = word(&random_word(&mut rng, len));
        if !is_primitive(&x).unwrap() {
            continue;
        }
        let reps = rng.random_range(1..=4);
        let w = x.repeat(reps);
        let degree = x_degree(&w, &code).map_err(|e| e.to_string())?;
        if degree > code.len() {
            return Err(format!("X={code}, x={x}, r={reps}: degree {degree}"));
        }
        worst = worst.max(degree);
        instances += 1;
    }
    Ok(format!("{instances} instances, largest degree {worst}"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 1..=5usize {
        let mut plan = BigAcei::new(n, WordGenerator::thue_morse()).map_err(|e| e.to_string())?;
        let h = plan.morphism().map_err(|e| e.to_string())?;
        for j in 1..=200usize {
            let image = h.apply(&plan.round(j).unwrap()).unwrap();
            let mut base = h.apply(&plan.chunk(1, j).unwrap()).unwrap().into_bytes();
            base.push(b'c');
            let base = word(&base);
            if image.len() != n * n * j || image != base.power_prefix(image.len()) {
                return Err(format!(
                    "n={n} j={j}: image is not a prefix of (h(u_1j) c)^ω"
                ));
            }
            // with one copy the image may have a shorter period of its own
            if n >= 2 {
                let (n, j) = (n as i64, j as i64);
                let expected = r(n, 1) - r(n, n * j + 1);
                let got = exponent_of(image.as_bytes());
                if got != expected {
                    return Err(format!("n={n} j={j}: exponent {got}, expected {expected}"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} rounds; exponent n - n/(nj+1) for n >= 2"
    ))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for k in [2usize, 3] {
        for n in 1..=3usize {
            let mut plan = OptimalBinary::new(n, k, 2 * k + 7, WordGenerator::thue_morse())
                .map_err(|e| e.to_string())?;
            for i in 1..=4 {
                let u = plan.u_len(i).unwrap() as i64;
                let expected = r(n as i64, 1) + r(u + 1, (k as i64 + 1) * (u + 1));
                let block = plan.block(i).unwrap();
                let got = exponent_of(block.as_bytes());
                if got != expected || got != plan.block_exponent() {
                    return Err(format!("k={k} n={n} i={i}: {got}, expected {expected}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} blocks at n + 1/(k+1)"))
}

/// Maximal exponent over factors of length at least `tail`, from maximal
/// runs of `s[i] = s[i+p]` for every period `p`.
fn runs_oracle(s: &[u8], tail: usize) -> Rational {
    let mut best = Rational::from_integer(0);
    for p in 1..s.len() {
        let mut run = 0;
        for i in 0..=s.len() - p {
            if i < s.len() - p && s[i] == s[i + p] {
                run += 1;
                continue;
            }
            if run + p >= tail {
                best = best.max(r((run + p) as i64, p as i64));
            }
            run = 0;
        }
    }
    if tail <= 1 || s.len() >= tail {
        best = best.max(Rational::from_integer(1));
    }
    best
}

fn criterion_9() -> Outcome {
    let mut tm = WordGenerator::thue_morse();
    let est = ace_estimate(&mut tm, 4096, 8).map_err(|e| e.to_string())?;
    let oracle = runs_oracle(tm.prefix(4096).unwrap().as_bytes(), 8);
    if est.estimate != Rational::from_integer(2) || oracle != est.estimate {
        return Err(format!(
            "Thue-Morse: estimate {}, oracle {oracle}",
            est.estimate
        ));
    }

    let mut gens = vec![
        WordGenerator::thue_morse(),
        WordGenerator::fibonacci(),
        optimal_binary_generator(1, 2, 7, WordGenerator::thue_morse()).unwrap(),
    ];
    for g in &mut gens {
        let mut prev = Rational::from_integer(0);
        for len in [64, 128, 256, 512] {
            let e = ace_estimate(g, len, 16).unwrap().estimate;
            if e < prev {
                return Err(format!("{}: estimate fell from {prev} to {e}", g.kind()));
            }
            prev = e;
        }
    }

    let mut ab = periodic_generator(&Word::parse("ab").unwrap()).unwrap();
    for len in [10, 50, 100, 400] {
        let e = ace_estimate(&mut ab, len, len / 2).unwrap().estimate;
        if e != r(len as i64, 2) {
            return Err(format!("periodic ab, prefix {len}: {e}"));
        }
    }

    for n in 1..=40 {
        if factor_complexity(&mut ab, 1000, n).unwrap() != 2 {
            return Err(format!("periodic ab complexity at {n}"));
        }
        let c = factor_complexity(&mut tm, 4096, n).unwrap();
        if c <= n {
            return Err(format!("Thue-Morse complexity {c} at n={n}"));
        }
    }
    Ok("Thue-Morse 4096/8 = 2 (oracle agrees); monotone; periodic linear; complexity".into())
}

fn criterion_10() -> Outcome {
    let words = all_words(b"ab", 6);
    let mut pairs = 0;
    for u in &words {
        // a witness longer than |u| can always be cut back to |u|
        let aux: Vec<&Vec<u8>> = words.iter().filter(|s| s.len() <= u.len()).collect();
        for v in &words {
            let pre = aux.iter().any(|s| {
                let vs: Vec<u8> = v.iter().chain(s.iter()).copied().collect();
                vs.starts_with(u)
            });
            let suf = aux.iter().any(|p| {
                let pv: Vec<u8> = p.iter().chain(v.iter()).copied().collect();
                pv.ends_with(u)
            });
            let (wu, wv) = (word(u), word(v));
            if prefix_comparable(&wu, &wv) != pre || suffix_comparable(&wu, &wv) != suf {
                return Err(format!(
                    "u={}, v={}",
                    String::from_utf8_lossy(u),
                    String::from_utf8_lossy(v)
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "lowpower identity", Duration::from_secs(5), criterion_1),
        (
            2,
            "lowpower upper bound",
            Duration::from_secs(120),
            criterion_2,
        ),
        (3, "highpower identity", Duration::from_secs(5), criterion_3),
        (
            4,
            "binary classification oracle",
            Duration::from_secs(60),
            criterion_4,
        ),
        (
            5,
            "witness soundness",
            Duration::from_secs(120),
            criterion_5,
        ),
        (6, "X-degree bound", Duration::from_secs(60), criterion_6),
        (
            7,
            "interleaved image identity",
            Duration::from_secs(30),
            criterion_7,
        ),
        (
            8,
            "optimal-binary block exponent",
            Duration::from_secs(30),
            criterion_8,
        ),
        (
            9,
            "ACE estimate property suite",
            Duration::from_secs(120),
            criterion_9,
        ),
        (
            10,
            "comparability oracle",
            Duration::from_secs(10),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {status} {name} [{:.2}s / {}s] {detail}",
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}

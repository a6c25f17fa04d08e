//! Load an LLOD lexicon, print it, and show that serialization is a fixed
//! point: serialize -> load -> serialize is byte-identical. Also load the
//! irregular as-exported variant and print the repairs applied.
//!
//! ```bash
//! cargo run --example llod_roundtrip
//! ```

use mathlod::lexicon::{load_llod, serialize_llod};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lexicon = load_llod(&fixture("lexicon_en.ttl"))?;
    let first = serialize_llod(&lexicon)?;
    let second = serialize_llod(&load_llod(&first)?)?;
    assert_eq!(first, second);
    println!("{first}");
    println!("# round trip is byte-stable: {} bytes", first.len());

    let raw = load_llod(&fixture("divide_entry_raw.ttl"))?;
    println!("# repairs applied to the as-exported variant:");
    for repair in raw.repairs() {
        println!("#   {repair}");
    }
    println!("# opaque extras kept: {}", raw.extras().len());
    Ok(())
}

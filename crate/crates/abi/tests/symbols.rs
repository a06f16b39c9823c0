mod common;

use std::collections::BTreeSet;

use crand::EXPORTED_SYMBOLS;
use crand_core::GeneratorKind;
use object::Object;

fn exported_symbols() -> BTreeSet<String> {
    let data = std::fs::read(common::shared_library_path()).unwrap();
    let file = object::File::parse(&*data).unwrap();
    let mach = file.format() == object::BinaryFormat::MachO;
    file.exports()
        .unwrap()
        .filter_map(|e| match e.unwrap().name() {
            object::read::NameOrOrdinal::Name(n) => Some(String::from_utf8_lossy(n).into_owned()),
            object::read::NameOrOrdinal::Ordinal(_) => None,
        })
        .map(|name| match name.strip_prefix('_') {
            Some(stripped) if mach => stripped.to_owned(),
            _ => name,
        })
        .collect()
}

#[test]
fn dynamic_symbol_table_is_exactly_the_documented_list() {
    let expected: BTreeSet<String> = EXPORTED_SYMBOLS.iter().map(|s| s.to_string()).collect();
    assert_eq!(exported_symbols(), expected);
}

fn header() -> String {
    std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/crand.h")).unwrap()
}

#[test]
fn header_declares_every_export() {
    let header = header();
    for name in EXPORTED_SYMBOLS {
        assert!(
            header.contains(&format!(" {name}(")),
            "{name} is not declared in crand.h"
        );
    }
}

#[test]
fn header_kind_ids_match_the_library() {
    let header = header();
    for kind in GeneratorKind::ALL {
        let line = format!("CRAND_{} = {}", kind.name().to_uppercase(), kind.id());
        assert!(header.contains(&line), "missing `{line}`");
    }
    for (name, code) in [
        ("CRAND_OK", 0),
        ("CRAND_BAD_KIND", 1),
        ("CRAND_BAD_SEED", 2),
        ("CRAND_NULL_ARGUMENT", 3),
    ] {
        assert!(header.contains(&format!("{name} = {code}")));
    }
}

#[test]
fn static_archive_is_built_alongside() {
    let so = common::shared_library_path();
    let dir = so.parent().unwrap();
    let archive = format!(
        "{}crand.{}",
        std::env::consts::DLL_PREFIX,
        if cfg!(windows) { "lib" } else { "a" }
    );
    assert!(
        dir.join(&archive).exists() || dir.parent().unwrap().join(&archive).exists(),
        "{archive} missing"
    );
}

//! On-disk cache behaviour.

use superyangian::AlgebraContext;
use superyangian_cli::cache::{Cache, CacheKey, ENGINE_VERSION};

fn key(trunc: usize) -> CacheKey {
    CacheKey::new(&AlgebraContext::new(1, 1, 3, trunc).unwrap(), "berezinian")
}

#[test]
fn put_then_get_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let value = vec![("c".to_string(), vec![1u32, 2, 0])];
    cache.put(&key(4), &value).unwrap();
    let raw = cache.get_raw(&key(4)).unwrap();
    assert_eq!(raw, serde_json::to_string(&value).unwrap());
    let back: Vec<(String, Vec<u32>)> = cache.get(&key(4)).unwrap();
    assert_eq!(back, value);
}

#[test]
fn truncation_is_part_of_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    cache.put(&key(4), &1u32).unwrap();
    assert_ne!(cache.path(&key(4)), cache.path(&key(5)));
    assert!(cache.get::<u32>(&key(5)).is_none());
}

#[test]
fn version_bump_invalidates() {
    let dir = tempfile::tempdir().unwrap();
    Cache::open(dir.path()).unwrap().put(&key(4), &7u32).unwrap();
    let bumped = Cache::with_version(dir.path(), &format!("{ENGINE_VERSION}-next")).unwrap();
    assert!(bumped.get::<u32>(&key(4)).is_none());
    assert_eq!(Cache::open(dir.path()).unwrap().get::<u32>(&key(4)), Some(7));
}

#[test]
fn corrupted_entry_is_a_miss() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    cache.put(&key(4), &vec![1u32, 2, 3]).unwrap();
    let path = cache.path(&key(4));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replace("[1,2,3]", "[1,2,4]")).unwrap();
    assert!(cache.get::<Vec<u32>>(&key(4)).is_none());
    std::fs::write(&path, "not json").unwrap();
    assert!(cache.get::<Vec<u32>>(&key(4)).is_none());
}

#[test]
fn get_or_insert_computes_once() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let (v, hit) = cache.get_or_insert(&key(4), || Ok::<_, ()>(vec![5u32])).unwrap();
    assert_eq!((v, hit), (vec![5], false));
    let (v, hit) = cache.get_or_insert(&key(4), || -> Result<Vec<u32>, ()> { panic!("recomputed") }).unwrap();
    assert_eq!((v, hit), (vec![5], true));
}

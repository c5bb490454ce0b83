//! Words in the letters `S, s, T, t` (lower case is the inverse).

use crate::error::{Error, Result};

pub fn validate(word: &str) -> Result<()> {
    for (position, letter) in word.chars().enumerate() {
        if !matches!(letter, 'S' | 's' | 'T' | 't') {
            return Err(Error::BadLetter { letter, position });
        }
    }
    Ok(())
}

fn invert_letter(c: char) -> char {
    if c.is_ascii_uppercase() {
        c.to_ascii_lowercase()
    } else {
        c.to_ascii_uppercase()
    }
}

/// Inverse word: reverse and swap case.
pub fn inverse(word: &str) -> Result<String> {
    validate(word)?;
    Ok(inverse_unchecked(word))
}

pub(crate) fn inverse_unchecked(word: &str) -> String {
    word.chars().rev().map(invert_letter).collect()
}

/// Replace `S`/`T` by the given words and `s`/`t` by their inverses.
pub fn substitute(word: &str, s_image: &str, t_image: &str) -> Result<String> {
    validate(word)?;
    validate(s_image)?;
    validate(t_image)?;
    let s_inv = inverse_unchecked(s_image);
    let t_inv = inverse_unchecked(t_image);
    let mut out = String::new();
    for c in word.chars() {
        out.push_str(match c {
            'S' => s_image,
            's' => &s_inv,
            'T' => t_image,
            _ => &t_inv,
        });
    }
    Ok(out)
}

/// Free reduction: cancel adjacent inverse pairs.
pub fn reduce(word: &str) -> Result<String> {
    validate(word)?;
    let mut out: Vec<char> = Vec::new();
    for c in word.chars() {
        if out.last() == Some(&invert_letter(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    Ok(out.into_iter().collect())
}

/// Swap `S` and `s` (the `S -> S^{-1}` substitution).
pub fn mirror_s(word: &str) -> String {
    word.chars()
        .map(|c| match c {
            'S' => 's',
            's' => 'S',
            o => o,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_word() {
        assert_eq!(inverse("TSt").unwrap(), "Tst");
        assert_eq!(inverse("ST").unwrap(), "ts");
        assert!(matches!(inverse("SX"), Err(Error::BadLetter { letter: 'X', position: 1 })));
    }

    #[test]
    fn substitution() {
        assert_eq!(substitute("TSt", "S", "TSt").unwrap(), "TStSTst");
        assert_eq!(reduce("TtTS").unwrap(), "TS");
    }
}

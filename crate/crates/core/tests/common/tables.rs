//! Tabulated rows, transcribed verbatim.

#![allow(dead_code)]

pub const LEN40_FOUR: &[(&str, &str, i64)] = &[
    ("0100001110", "0100110011", 0),
    ("0000110011", "0010111001", 0),
    ("0101100111", "1111001011", 0),
    ("1001000100", "0101101101", 10),
    ("1000000010", "1101011101", 10),
];

pub const LEN40_SYMMETRIC: &[(&str, &str, &str, i64)] = &[
    ("110111", "0010001100", "1110100101", 0),
    ("011010", "0010111000", "1110010010", 0),
    ("011010", "0010011100", "1010000100", 0),
    ("100111", "1010110011", "0000100110", 0),
    ("111001", "1001011010", "0010011001", 0),
    ("010111", "1001111001", "0001011111", 1),
    ("011001", "0111000011", "0111100001", 1),
    ("011010", "0010000110", "1100000000", 1),
    ("110001", "1011000011", "0100110100", 2),
    ("000110", "0100010011", "1100001000", 2),
    ("111001", "1100101001", "0100111110", 2),
    ("110100", "1101111011", "0011111001", 2),
    ("001010", "1010000111", "1111110011", 4),
    ("011000", "0101010110", "0000001100", 4),
    ("100111", "0000110011", "1010011001", 4),
    ("000010", "0011111000", "0100101010", 6),
    ("000010", "1011101000", "0100101010", 6),
    ("010100", "1000111111", "0100100101", 10),
    ("110100", "0101010101", "1001110010", 10),
    ("101010", "1000100010", "0101111101", 10),
];

pub const LEN40_CZERO: &[(&str, i64)] = &[
    ("1101011010", 0),
    ("1100011000", 2),
    ("0111001110", 2),
    ("0100001000", 2),
    ("0011100111", 2),
    ("0111101111", 4),
    ("1010010100", 6),
    ("1101011010", 6),
    ("1000110001", 10),
    ("1111011110", 10),
];

pub const LEN64_SYMMETRIC: &[(&str, &str, &str, i64)] = &[
    ("101001111", "0001111001100011", "1101001110011001", 4),
    ("001101011", "0101001000001001", "0101011110111101", 8),
    ("111101110", "0011110000111101", "0101011110111101", 8),
    ("111101011", "0000100001000001", "0100000011001101", 10),
    ("101101111", "1000101000101000", "0010111110100010", 12),
    ("100110100", "0001001001111111", "0101011110111101", 13),
    ("100011101", "1010110001101011", "1100111001100100", 16),
    ("110001001", "0010111110100010", "1100011011111000", 17),
    ("000011110", "0000011101110111", "0100000011001101", 18),
    ("101101100", "1111001000100111", "1100101101001011", 20),
    ("000011100", "0010001101001111", "0101011110111101", 24),
    ("010111001", "1010000110110000", "0100010001011111", 24),
    ("010010011", "0000000100000101", "0101011110111101", 28),
    ("111011011", "0100000101111111", "0001010001000001", 32),
    ("011111000", "1000101000100010", "0001001101000011", 34),
];

pub const LEN64_F2U_GENERAL: &[(&str, &str, &str, i64)] = &[
    ("0,u,0,0,1,u,3,0", "u,u,u,0,0,1,1,3", "0,u,3,0,0,u,3,0", 0),
    ("u,u,0,u,1,u,1,u", "u,u,u,0,0,1,1,3", "0,0,3,0,0,0,3,0", 0),
    ("u,u,u,u,1,u,3,u", "u,u,u,0,0,1,1,3", "u,u,1,u,u,u,1,u", 0),
    ("u,0,u,0,0,1,u,3", "u,u,u,u,0,1,1,1", "1,u,3,0,3,u,1,0", 4),
    ("u,u,u,u,1,1,3,1", "u,u,0,1,0,0,1,3", "u,u,0,u,u,u,0,u", 4),
    ("0,u,0,u,1,u,3,u", "u,u,u,0,0,1,1,3", "u,0,3,0,u,0,3,0", 4),
    ("0,u,0,u,1,1,0,1", "u,u,0,u,1,1,1,3", "u,0,u,0,u,3,u,3", 8),
    ("u,0,0,u,1,u,1,0", "u,u,u,u,0,1,1,1", "u,0,1,0,u,0,1,0", 8),
    ("u,u,u,u,1,1,u,1", "u,u,u,u,u,1,0,1", "u,0,u,u,1,3,1,1", 8),
    ("u,u,0,0,1,1,0,3", "u,u,0,u,1,1,1,3", "u,u,0,u,u,1,0,1", 12),
    ("u,u,u,u,0,1,0,3", "u,u,u,u,0,1,1,1", "1,u,3,u,1,u,3,u", 12),
    ("0,u,0,u,0,1,u,3", "u,u,u,0,0,1,1,3", "1,0,3,0,1,0,3,0", 12),
    ("u,0,0,0,u,1,u,3", "u,u,u,0,0,1,1,3", "1,u,3,u,1,u,3,u", 12),
    ("u,0,u,0,1,1,u,1", "u,u,u,u,u,1,0,1", "0,0,0,u,1,3,1,1", 16),
    ("u,u,u,u,0,1,0,3", "u,u,u,u,0,1,1,1", "3,0,3,0,3,0,3,0", 16),
    ("u,u,0,u,u,1,u,3", "u,u,u,0,0,1,1,3", "3,0,3,0,3,0,3,0", 16),
    ("0,0,u,0,0,1,0,3", "u,u,u,0,0,1,1,3", "3,0,3,0,3,0,3,0", 16),
    ("u,u,u,u,1,1,u,1", "u,u,0,0,u,1,u,3", "u,u,u,0,3,3,3,1", 20),
    ("u,0,0,u,1,u,1,0", "u,u,u,u,0,1,1,1", "0,0,1,0,0,0,1,0", 20),
    ("u,u,u,u,1,1,0,1", "u,u,0,u,1,3,3,1", "u,u,u,u,u,3,0,3", 24),
    ("u,0,0,u,0,1,u,1", "u,u,u,u,0,1,1,1", "3,u,3,0,3,u,3,0", 24),
    ("u,u,0,u,0,1,0,1", "u,u,u,0,0,u,0,1", "1,0,1,0,1,3,1,3", 24),
    ("u,0,0,0,u,1,u,3", "u,u,u,0,0,1,1,3", "1,u,3,0,1,u,3,0", 28),
    ("u,u,u,u,u,1,0,3", "u,u,u,0,0,1,1,3", "1,u,1,0,1,u,1,0", 32),
    ("u,u,0,0,1,0,1,u", "u,u,u,u,0,1,1,1", "u,0,3,0,u,0,3,0", 36),
    ("u,u,u,0,1,u,3,0", "u,u,u,0,0,1,1,3", "u,u,3,u,u,u,3,u", 36),
    ("0,u,u,0,0,1,0,1", "u,u,u,0,0,1,1,3", "1,0,3,0,1,0,3,0", 44),
    ("0,u,u,0,0,1,0,1", "u,u,u,0,0,1,1,3", "1,u,1,u,1,u,1,u", 48),
    ("u,0,u,0,u,1,0,3", "u,u,u,0,0,1,1,3", "3,u,3,u,3,u,3,u", 80),
];

pub const LEN64_F4U_SYMMETRIC: &[(&str, &str, &str, i64)] = &[
    ("D,F,5,F", "E,C,0,1", "7,B,4,A", 1),
    ("5,B,D,B", "A,E,B,D", "7,F,1,8", 5),
    ("B,9,D,9", "2,E,9,7", "D,7,1,2", 9),
    ("D,F,F,F", "E,E,9,8", "A,6,9,7", 13),
    ("9,7,7,7", "0,F,C,0", "4,1,F,A", 17),
    ("F,9,7,9", "2,4,3,F", "F,5,B,8", 21),
    ("D,0,F,0", "9,E,C,A", "D,B,4,2", 29),
    ("5,8,6,8", "F,5,E,8", "0,8,9,7", 40),
    ("B,4,4,4", "7,E,8,D", "0,6,4,2", 52),
];

/// (general row, c, X, gamma, beta)
pub const LEN68_EXTENSIONS: &[(usize, &str, &str, i64, i64)] = &[
    (2, "1", "31u011u30uu113u3333u11u010301101", 5, 101),
    (2, "3", "130031u300013101313u31uu301u3103", 5, 105),
];

/// (extension row, x suffix, gamma, beta)
pub const LEN68_NEIGHBORS_OF_EXTENSIONS: &[(usize, &str, i64, i64)] = &[
    (2, "1010111001011100010100000010000000", 5, 109),
    (2, "0000110011011010111101110100011100", 5, 111),
    (2, "0000111110011111111011010001100000", 5, 112),
    (2, "1101110000001001011100101100010101", 5, 114),
    (1, "1110110100000001001100000111001010", 5, 115),
    (2, "1001010001010101110010111110111000", 6, 133),
];

/// (i, x suffix, beta), all with gamma = 6
pub const LEN68_GAMMA6_NEIGHBORS: &[(usize, &str, i64)] = &[
    (1, "1111111100111100001100001000000111", 137),
    (2, "0101001001001111111011100010111011", 139),
    (3, "1000001100000110110110000111100010", 140),
    (4, "0010011101110110011001110110110110", 141),
    (5, "1111111111000011111101100010011001", 142),
    (6, "1001000001111111111010010000011110", 143),
    (7, "1100100010000111001100111111110001", 144),
    (8, "0000110001110110011011011010000110", 145),
    (9, "1000010100001010110101110111110101", 146),
    (10, "1100110100000010010000110010011110", 147),
    (11, "1110101000011110100101111111101011", 148),
    (12, "0110011001001101000111010101011000", 149),
    (13, "1111111100101101000000001011111000", 150),
    (14, "0000100001100010111010011111111000", 151),
    (15, "1110000010100000001110110110000101", 152),
    (16, "1010100100110011111101001101001001", 153),
    (17, "1111010010000100100000101000011101", 155),
    (18, "1000001011110111100101100000001000", 159),
    (19, "0001010001010101010010010001100010", 160),
    (20, "1100000100011110101111110001010101", 161),
    (21, "0101110011110010110000111111010011", 163),
    (22, "1000000111111000000010111100010001", 164),
    (23, "0100000001010000001001110110010110", 165),
    (24, "0111001010010100000010010010101000", 166),
    (25, "1111010011000111000101101001011100", 167),
    (26, "0010110010110100000010001111000000", 168),
    (27, "0000010011010110001010010000101001", 169),
    (28, "1110101000110000011111010101010101", 170),
    (29, "1110100001100111100100000010010010", 171),
    (30, "1000001101101110010001101010111101", 172),
    (31, "1100100001110011101001010001100000", 173),
    (32, "0100011001000011000100010100101100", 174),
    (33, "0110000001110110000111101000101011", 177),
    (34, "1011111000100000001011010000101010", 184),
];

pub const GAMMA6_X: &str = "3011u0u3011u100u300uuu1330131u03";

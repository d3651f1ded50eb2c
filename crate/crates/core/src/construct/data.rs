//! Certified chain-0 coordinates for the extended planar family, one table
//! per size parameter m = n/12. Chains 1 and 2 are images of chain 0 under
//! the order-3 integer map used for the three-fold symmetry; every table was
//! verified exactly (all counting targets and structural properties) before
//! being frozen here.

pub(super) const CHAIN0_M1: [(&str, &str); 4] = [
    ("1", "0"),
    ("16/25", "0"),
    ("29/110", "1/83"),
    ("3/35", "-4/89"),
];

pub(super) const CHAIN0_M2: [(&str, &str); 8] = [
    ("1", "0"),
    ("367/426", "1/754"),
    ("113/156", "5/942"),
    ("475/807", "11/921"),
    ("226/711", "6/179"),
    ("83/284", "35/968"),
    ("10/141", "-36/1009"),
    ("11/200", "-40/1021"),
];

pub(super) const CHAIN0_M3: [(&str, &str); 12] = [
    ("1", "0"),
    ("257/284", "1/1024"),
    ("287/354", "1/292"),
    ("391/545", "4/519"),
    ("5/8", "1/73"),
    ("461/864", "7/327"),
    ("297/889", "45/1009"),
    ("149/472", "16/339"),
    ("300/1009", "19/381"),
    ("15/121", "-55/944"),
    ("50/407", "-41/700"),
    ("106/871", "-37/626"),
];

pub(super) const CHAIN0_M4: [(&str, &str); 16] = [
    ("1", "0"),
    ("951/1019", "0"),
    ("737/850", "1/552"),
    ("125/156", "4/981"),
    ("722/981", "7/965"),
    ("547/815", "11/971"),
    ("551/908", "13/797"),
    ("341/628", "22/991"),
    ("291/869", "39/809"),
    ("321/983", "14/283"),
    ("246/773", "27/532"),
    ("53/171", "47/903"),
    ("127/1017", "-53/903"),
    ("82/677", "-13/218"),
    ("117/998", "-62/1015"),
    ("103/909", "-15/238"),
];

pub(super) const CHAIN0_M5: [(&str, &str); 20] = [
    ("1", "0"),
    ("574/605", "0"),
    ("782/871", "1/845"),
    ("571/674", "2/751"),
    ("557/699", "4/845"),
    ("59/79", "5/676"),
    ("656/941", "9/845"),
    ("388/599", "1/69"),
    ("91/152", "11/581"),
    ("512/931", "15/626"),
    ("143/435", "43/783"),
    ("317/983", "57/1018"),
    ("302/955", "27/473"),
    ("301/971", "53/911"),
    ("291/958", "15/253"),
    ("121/967", "-49/863"),
    ("63/508", "-21/368"),
    ("123/1001", "-5/87"),
    ("79/649", "-53/914"),
    ("109/904", "-49/836"),
];

pub(super) const CHAIN0_M6: [(&str, &str); 24] = [
    ("1", "0"),
    ("6278/6551", "1/5033"),
    ("2437/2658", "4/5033"),
    ("2991/3416", "9/5033"),
    ("2693/3227", "7/2202"),
    ("2831/3567", "3/604"),
    ("1061/1409", "11/1538"),
    ("4356/6113", "11/1130"),
    ("5475/8143", "101/7944"),
    ("4711/7450", "47/2921"),
    ("4555/7687", "67/3373"),
    ("3997/7228", "189/7864"),
    ("2433/7294", "407/7393"),
    ("1361/4138", "365/6534"),
    ("797/2458", "452/7975"),
    ("853/2669", "97/1687"),
    ("2518/7995", "448/7681"),
    ("1491/4805", "83/1403"),
    ("261/2011", "-154/2615"),
    ("971/7666", "-237/3968"),
    ("947/7669", "-110/1809"),
    ("734/6103", "-411/6616"),
    ("891/7613", "-427/6707"),
    ("769/6757", "-355/5426"),
];

pub(super) fn chain0_table(m: usize) -> Option<&'static [(&'static str, &'static str)]> {
    match m {
        1 => Some(&CHAIN0_M1),
        2 => Some(&CHAIN0_M2),
        3 => Some(&CHAIN0_M3),
        4 => Some(&CHAIN0_M4),
        5 => Some(&CHAIN0_M5),
        6 => Some(&CHAIN0_M6),
        _ => None,
    }
}

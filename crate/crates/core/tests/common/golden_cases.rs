//! One worked example per rule: a clean sentence, the token index the rule
//! fires at, and the expected corrupted sentence.

use turkgec::RuleId;

pub struct GoldenCase {
    pub rule: RuleId,
    pub correct: &'static str,
    pub index: usize,
    pub corrupted: &'static str,
}

const fn case(
    rule: RuleId,
    correct: &'static str,
    index: usize,
    corrupted: &'static str,
) -> GoldenCase {
    GoldenCase {
        rule,
        correct,
        index,
        corrupted,
    }
}

/// The primary example of every rule, in catalog order.
pub const GOLDEN: [GoldenCase; 21] = [
    case(
        RuleId::ConjDeSep,
        "Durumu oğluna da bildirdi .",
        1,
        "Durumu oğlunada bildirdi .",
    ),
    case(
        RuleId::ConjDeVh,
        "Çok da iyi olmuş .",
        1,
        "Çok de iyi olmuş .",
    ),
    case(
        RuleId::ConjDeAr,
        "Sınıf da temizlendi .",
        1,
        "Sınıf ta temizlendi .",
    ),
    case(
        RuleId::Yada,
        "Sen ya da o buradan gidecek .",
        1,
        "Sen yada o buradan gidecek .",
    ),
    case(RuleId::ConjDeApos, "Ayşe de geldi .", 0, "Ayşe'de geldi ."),
    case(
        RuleId::CaseDe,
        "Evde hiç süt kalmamıştı .",
        0,
        "Ev de hiç süt kalmamıştı .",
    ),
    case(
        RuleId::ConjKiSep,
        "Bugün öyle çok yorulmuş ki hemen yattı .",
        3,
        "Bugün öyle çok yorulmuşki hemen yattı .",
    ),
    case(
        RuleId::ConjKiExc,
        "Belki yarın gelir .",
        0,
        "Bel ki yarın gelir .",
    ),
    case(
        RuleId::ForeignR1,
        "Bir gram altın aldı .",
        1,
        "Bir gıram altın aldı .",
    ),
    case(
        RuleId::PronouncExc,
        "Yarın başlayacağım .",
        1,
        "Yarın başlıyacağım .",
    ),
    case(
        RuleId::BisyllHaplVow,
        "Çocuğun ağzı kurudu .",
        1,
        "Çocuğun ağızı kurudu .",
    ),
    case(
        RuleId::BisyllHaplVowExc,
        "Kedi içeride uyuyor .",
        1,
        "Kedi içerde uyuyor .",
    ),
    case(
        RuleId::ForeignR2,
        "Gecikmenin sebebi belli .",
        1,
        "Gecikmenin sebepi belli .",
    ),
    case(
        RuleId::ForeignR2Exc,
        "Bütün evrakı getirdi .",
        1,
        "Bütün evrağı getirdi .",
    ),
    case(
        RuleId::LightVerbSep,
        "Size arz etmek istiyorum .",
        1,
        "Size arzetmek istiyorum .",
    ),
    case(
        RuleId::LightVerbAdj,
        "Komutan emretti .",
        1,
        "Komutan emir etti .",
    ),
    case(
        RuleId::CompVerbAdj,
        "Yol boyunca gidedurmak zordu .",
        2,
        "Yol boyunca gide durmak zordu .",
    ),
    case(
        RuleId::PronounExc,
        "Hiçbir şey demedi .",
        0,
        "Hiç bir şey demedi .",
    ),
    case(RuleId::SentCap, "Onlar geldi .", 0, "onlar geldi ."),
    case(
        RuleId::Capped,
        "Bana bir kâğıt verdi .",
        2,
        "Bana bir kağıt verdi .",
    ),
    case(
        RuleId::Abbrev,
        "Kökeni Alm. olarak verilmiş .",
        1,
        "Kökeni Alm olarak verilmiş .",
    ),
];

/// Secondary examples. The compound-verb entries keep the same suffix on
/// both sides of the pair.
pub const EXTRA: [GoldenCase; 9] = [
    case(
        RuleId::ConjKiExc,
        "Oysaki herkes biliyordu .",
        0,
        "Oysa ki herkes biliyordu .",
    ),
    case(
        RuleId::ConjKiExc,
        "Gelmedi çünkü hastaydı .",
        1,
        "Gelmedi çünki hastaydı .",
    ),
    case(
        RuleId::CompVerbAdj,
        "Sonunda uyuyakalma korkusu geçti .",
        1,
        "Sonunda uyuya kalma korkusu geçti .",
    ),
    case(
        RuleId::CompVerbAdj,
        "Birden çıkagelmek istedi .",
        1,
        "Birden çıka gelmek istedi .",
    ),
    case(
        RuleId::PronounExc,
        "Herhangi bir sorun yok .",
        0,
        "Her hangi bir sorun yok .",
    ),
    case(
        RuleId::Capped,
        "Eski bir karargâh gördük .",
        2,
        "Eski bir karargah gördük .",
    ),
    case(
        RuleId::Abbrev,
        "Ablam THY'de çalışıyor .",
        1,
        "Ablam THY'da çalışıyor .",
    ),
    case(
        RuleId::Abbrev,
        "Son cm'yi ölçmedi .",
        1,
        "Son cm'ye ölçmedi .",
    ),
    case(
        RuleId::ConjDeSep,
        "Uyuyakaldığı için hem işe gitmedi hem de geldi .",
        5,
        "Uyuyakaldığı için hem işe gitmedi hemde geldi .",
    ),
];

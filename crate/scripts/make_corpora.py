"""Builds the clean sentence corpora under data/ from phrase templates.

sample_corpus.txt: 1000 unique, well-formed sentences.
fuzz_corpus.txt:   500 sentences with punctuation, casing and token noise.

Usage: python3 scripts/make_corpora.py
"""

import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
BACK = set("aıou")
FRONT = set("eiöü")


def last_vowel(word):
    for ch in reversed(word.lower()):
        if ch in BACK or ch in FRONT:
            return ch
    return None


def clitic(word):
    return "da" if last_vowel(word) in BACK else "de"


def capitalize(sentence):
    first = sentence[0]
    head = {"i": "İ", "ı": "I"}.get(first, first.upper())
    return head + sentence[1:]


SUBJECTS = [
    "Ali", "Ayşe", "Mehmet", "Zeynep", "Elif", "Murat", "Can", "Deniz",
    "Selin", "Emre", "Burak", "Merve", "annem", "babam", "öğretmen",
    "komşumuz", "kardeşim", "müdür", "çocuklar", "doktor", "arkadaşım",
    "dedem", "teyzem", "Prof. Kaya", "Dr. Aksoy", "oğlu", "kral",
]

TIMES = [
    "dün", "bugün", "yarın", "sabah", "akşam", "geçen hafta", "bu sabah",
    "her gün", "birkaç gün önce", "hafta sonu", "öğleden sonra", "biraz önce",
]

LOCATIVES = [
    "evde", "okulda", "bahçede", "parkta", "ofiste", "sokakta", "köyde",
    "şehirde", "markette", "kütüphanede", "sınıfta", "mutfakta", "otelde",
    "hastanede", "içeride", "dışarıda", "yukarıda", "istasyonda", "sinemada",
    "toplantıda", "mağazada", "dükkânda", "THY'de", "TRT'de", "ODTÜ'de",
]

PAST = [
    "kitabı masaya bıraktı", "mektubu okudu", "hesabı ödedi",
    "cevabı bilmiyordu", "kâğıdı katladı", "evrakı imzaladı", "planı anlattı",
    "programı değiştirdi", "projeyi teslim etti", "treni kaçırdı",
    "teklifi kabul etti", "arabayı tamir etti", "annesine yardım etti",
    "sonucu tahmin etti", "kapıyı kontrol etti", "bu rengi tercih etti",
    "askerlere emretti", "anahtarını kaybetti", "onu affetti", "soğuğu hissetti",
    "teklifi reddetti", "sorunu halletti", "yeni bir yol keşfetti",
    "filmi seyretti", "adını kaydetti", "uyuyakaldı", "çıkageldi",
    "hemen uyudu", "eve döndü", "uzun süre bekledi", "yüksek sesle güldü",
    "hiçbir şey söylemedi", "birkaç kitap aldı", "biraz dinlendi",
    "birçok soru sordu", "herhangi bir sorun görmedi", "ağzını açmadı",
    "fikrini değiştirdi", "aklını kaybetti", "gönlünü aldı", "burnunu sildi",
    "şikâyet etti", "dükkânı kapattı", "rüzgârı hissetti", "hikâyeyi anlattı",
    "yemeği beğendi", "sabrını kaybetti", "kebabı yedi", "dolabı boşalttı",
    "stresi azalttı", "problemi çözdü", "trafikte kaldı", "spor yaptı",
    "iki gram altın aldı", "krediyi ödedi", "grubu topladı", "onu ziyaret etti",
    "işini bitirdi", "bize telefon etti", "maçı kazandı", "kahvesini içti",
]

FUTURE = [
    "gelecek", "gidecek", "okuyacak", "gelemeyecek", "bekleyecek",
    "söyleyecek", "anlatacak", "arayacak", "başlayacak", "oynayacak",
    "dinleyecek", "temizleyecek", "hazırlayacak", "ödeyecek", "deneyecek",
    "yardım edecek", "kabul edecek", "teslim edecek", "yazıverecek",
    "gelebilecek", "okuyabilecek", "bitirebilecek",
]

PRESENT = [
    "çok mutlu", "biraz yorgun", "hâlâ hasta", "işe hazır", "bu konuda haklı",
    "sonuçtan memnun", "yeni bir evde", "çok meraklı", "hukuk okuyor",
    "ahlakı sağlam", "devlete güveniyor", "kalbi kırık", "rengi solmuş",
]

KI_LEADS = [
    "o kadar yorulmuş ki", "öyle sevindi ki", "bir baktım ki",
    "diyor ki", "anladım ki", "öyle çalıştı ki", "bildim ki",
]

LINKED = [
    "belki", "çünkü", "halbuki", "sanki", "mademki", "oysaki",
]

PAIRS = [
    ("çay", "kahve"), ("bugün", "yarın"), ("Ali", "Ayşe"), ("otobüs", "tren"),
    ("kitap", "dergi"), ("sen", "ben"), ("Ankara", "İstanbul"),
    ("telefon", "mektup"), ("evde", "bahçede"), ("sabah", "akşam"),
]


def simple(rng):
    parts = []
    if rng.random() < 0.45:
        parts.append(rng.choice(TIMES))
    subject = rng.choice(SUBJECTS)
    parts.append(subject)
    if rng.random() < 0.35:
        parts.append(clitic(subject))
    if rng.random() < 0.5:
        parts.append(rng.choice(LOCATIVES))
    roll = rng.random()
    if roll < 0.6:
        parts.append(rng.choice(PAST))
    elif roll < 0.85:
        parts.append(rng.choice(FUTURE))
    else:
        parts.append(rng.choice(PRESENT))
    return " ".join(parts)


def with_ki(rng):
    lead = rng.choice(KI_LEADS)
    return f"{rng.choice(SUBJECTS)} {lead} {rng.choice(PAST)}"


def with_linker(rng):
    return f"{rng.choice(LINKED)} {rng.choice(SUBJECTS)} {rng.choice(FUTURE)}"


def with_yada(rng):
    a, b = rng.choice(PAIRS)
    return f"{a} ya da {b} {rng.choice(['olabilir', 'fark etmez', 'seçilecek', 'gelecek'])}"


def with_hem(rng):
    a, b = rng.sample(PAST, 2)
    return f"{rng.choice(SUBJECTS)} hem {a} hem de {b}"


def with_abbrev(rng):
    items = rng.choice(["kalem , defter", "elma , armut", "masa , sandalye"])
    tail = rng.choice(["vb. şeyler aldı", "vs. getirdi", "vb. ürünler sattı"])
    return f"{rng.choice(SUBJECTS)} {items} {tail}"


def sentence(rng):
    roll = rng.random()
    if roll < 0.60:
        body = simple(rng)
    elif roll < 0.70:
        body = with_ki(rng)
    elif roll < 0.78:
        body = with_linker(rng)
    elif roll < 0.86:
        body = with_yada(rng)
    elif roll < 0.95:
        body = with_hem(rng)
    else:
        body = with_abbrev(rng)
    return capitalize(body) + " ."


NOISE = [
    "%50", "3.", "(", ")", '"', "'", "ANKARA", "de", "da", "ki", "-", "...",
    "İstanbul'da", "THY'de", "cm'yi", "5", "km", "x", "Çok", "DE", "yada",
    "hemde", "evde", "Ev", "Evde", "gelemiyecek", "hiç bir", "Alm.", "TDK'ye",
]


def fuzz(rng):
    tokens = sentence(rng).split(" ")
    for _ in range(rng.randint(0, 3)):
        tokens.insert(rng.randint(0, len(tokens)), rng.choice(NOISE))
    if rng.random() < 0.2:
        tokens[0] = tokens[0].lower()
    if rng.random() < 0.1:
        tokens.pop()
    return " ".join(t for t in tokens if t)


def unique(rng, make, n):
    seen, out = set(), []
    while len(out) < n:
        s = make(rng)
        if s.strip() and s not in seen:
            seen.add(s)
            out.append(s)
    return out


def main():
    data = ROOT / "data"
    data.mkdir(exist_ok=True)
    sample = unique(random.Random(20240), sentence, 1000)
    (data / "sample_corpus.txt").write_text("\n".join(sample) + "\n", encoding="utf-8")
    noisy = unique(random.Random(31337), fuzz, 500)
    (data / "fuzz_corpus.txt").write_text("\n".join(noisy) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()

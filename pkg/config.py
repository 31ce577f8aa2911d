# config.py
import os
from dotenv import load_dotenv

load_dotenv()

def _getenv(*names, default=None):
    """Retorna o primeiro env não vazio dentre os nomes informados."""
    for n in names:
        v = os.getenv(n)
        if v is not None and str(v).strip() != "":
            return v.strip()
    return default

def _getint(*names, default):
    v = _getenv(*names, default=str(default))
    try:
        return int(v)
    except ValueError:
        raise ValueError(f"Variável {names[0]} precisa ser inteira, recebido {v!r}")

# Universo padrão dos comandos
NUM_X = _getint("GJA_NUM_X", default=4)
NUM_THETA = _getint("GJA_NUM_THETA", default=1)
MAX_DEG = _getint("GJA_MAX_DEG", default=5)

# Amostragem das identidades (semente fixa, reportada na saída)
SEED = _getint("GJA_SEED", default=7)
TRIALS = _getint("GJA_TRIALS", default=200)
DERIVED_TRIALS = _getint("GJA_DERIVED_TRIALS", default=100)
SAMPLE_DEG = _getint("GJA_SAMPLE_DEG", default=2)
SAMPLE_TERMS = _getint("GJA_SAMPLE_TERMS", default=3)
COEFF_RANGE = _getint("GJA_COEFF_RANGE", default=3)

THREADS = _getint("GJA_THREADS", default=1)
# Até este grau o fecho de Cohn forma todos os produtos, sem saturar blocos
EXACT_CLOSURE_DEG = _getint("GJA_EXACT_CLOSURE_DEG", default=4)
OUTPUT_DIR = _getenv("GJA_OUTPUT_DIR", default="output")
LOG_LEVEL = _getenv("GJA_LOG_LEVEL", default="INFO").upper()

def testar_config():
    print("=== Variáveis de Configuração ===")
    print(f"NUM_X:          {NUM_X}")
    print(f"NUM_THETA:      {NUM_THETA}")
    print(f"MAX_DEG:        {MAX_DEG}")
    print(f"SEED:           {SEED}")
    print(f"TRIALS:         {TRIALS}")
    print(f"DERIVED_TRIALS: {DERIVED_TRIALS}")
    print(f"SAMPLE_DEG:     {SAMPLE_DEG}")
    print(f"SAMPLE_TERMS:   {SAMPLE_TERMS}")
    print(f"COEFF_RANGE:    {COEFF_RANGE}")
    print(f"THREADS:        {THREADS}")
    print(f"EXACT_CLOSURE_DEG: {EXACT_CLOSURE_DEG}")
    print(f"OUTPUT_DIR:     {OUTPUT_DIR}")
    print(f"LOG_LEVEL:      {LOG_LEVEL}")

if __name__ == "__main__":
    testar_config()

"""
Rowmotion em retângulos
Rowmotion birracional, linear por partes e combinatório em [r]×[s], menores de
caminhos e a recorrência do octaedro, palavras de Stanley-Thomas e RSK
birracional, com uma suíte de verificação em aritmética exata.
"""

__version__ = "1.0.0"

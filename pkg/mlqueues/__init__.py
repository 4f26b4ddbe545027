'''Multiline queues, Macdonald polynomials and the multispecies ASEP'''

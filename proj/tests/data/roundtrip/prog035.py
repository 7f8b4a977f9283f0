b1 = 13 != 0 and True
print(not 16 == 19)
b2 = ((True))
print(-2 + 18)
print((16 if b1 or b2 else 0 + 7))

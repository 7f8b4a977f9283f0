k = {0: 8, 1: 7, 2: 2}
s = eval(input())
k[s] = k[s] + 1
print(k[0] + k[1] + k[2])
print(k)
print(k[s] if k[s] != 1 else -1)

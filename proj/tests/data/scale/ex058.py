k = eval(input())
m = eval(input())
x = k
k = m
m = x
print(k)
print(m)
print(k == m)
